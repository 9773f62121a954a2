#include "balancing/linearize.hpp"

#include <gtest/gtest.h>

#include "balancing/sequences.hpp"

namespace balancing {
namespace {

Integer direct_power(std::int64_t n, std::int64_t l) {
  Integer b = balancing(n);
  Integer r = 1;
  for (std::int64_t i = 0; i < l; ++i) r *= b;
  return r;
}

TEST(LinearizeTest, OddPowerOne) {
  LinearForm f = linearize_odd(0);
  ASSERT_EQ(f.terms().size(), 1U);
  EXPECT_EQ(f.coefficient({1, 0}), Rational(1));
  EXPECT_TRUE(f.constant().is_zero());
  EXPECT_EQ(render(f), "B(n)");
}

TEST(LinearizeTest, OddPowerThree) {
  LinearForm f = linearize_odd(1);
  EXPECT_EQ(f.power(), 3);
  ASSERT_EQ(f.terms().size(), 2U);
  EXPECT_EQ(f.coefficient({3, 0}), Rational(1, 32));
  EXPECT_EQ(f.coefficient({1, 0}), Rational(-3, 32));
  EXPECT_EQ(render(f), "(1/32)*B(3n) - (3/32)*B(n)");
  // (6930 - 18) / 32 = 216
  EXPECT_EQ(f.value_at(2), Rational(216));
}

TEST(LinearizeTest, EvenPowerTwo) {
  LinearForm f = linearize_even(1);
  EXPECT_EQ(f.power(), 2);
  ASSERT_EQ(f.terms().size(), 2U);
  EXPECT_EQ(f.coefficient({2, 0}), Rational(1, 96) - Rational(6, 32));
  EXPECT_EQ(f.coefficient({2, 0}), Rational(-17, 96));
  EXPECT_EQ(f.coefficient({2, 1}), Rational(1, 96));
  EXPECT_EQ(f.constant(), Rational(-1, 16));
  EXPECT_EQ(f.value_at(0), Rational(0));
  EXPECT_EQ(f.value_at(1), Rational(1));
  EXPECT_EQ(render(f), "-(17/96)*B(2n) + (1/96)*B(2n+2) - 1/16");
}

TEST(LinearizeTest, ConstantOutsideScaleFailsAtOne) {
  // Taking the even-power constant as (-1)^l C(2l, l), not divided by 2^{5l}.
  LinearForm literal = linearize_even(1);
  literal.set_constant(Rational(-2));
  EXPECT_EQ(literal.value_at(1), Rational(-15, 16));
  EXPECT_THROW(evaluate_linear_form(literal, 1), InconsistencyError);
}

TEST(LinearizeTest, DispatchByParity) {
  EXPECT_EQ(linearize(1), linearize_odd(0));
  EXPECT_EQ(linearize(3), linearize_odd(1));
  EXPECT_EQ(linearize(2), linearize_even(1));
  EXPECT_EQ(linearize(8), linearize_even(4));
  EXPECT_THROW(linearize(0), std::invalid_argument);
  EXPECT_THROW(linearize_even(0), std::invalid_argument);
  EXPECT_THROW(linearize_odd(-1), std::invalid_argument);
}

TEST(LinearizeTest, EvaluateSpotValues) {
  EXPECT_EQ(evaluate_linear_form(linearize(3), 2), 216);
  EXPECT_EQ(evaluate_linear_form(linearize(2), 2), 36);

  LinearForm constant_only(2);
  constant_only.set_constant(Rational(5));
  EXPECT_EQ(evaluate_linear_form(constant_only, 0), 5);
}

TEST(LinearizeTest, MatchesDirectPowers) {
  for (std::int64_t l = 1; l <= 8; ++l) {
    const LinearForm f = linearize(l);
    for (std::int64_t n = 0; n <= 20; ++n) {
      ASSERT_EQ(evaluate_linear_form(f, n), direct_power(n, l)) << "l=" << l << " n=" << n;
    }
  }
}

TEST(LinearizeTest, TermCounts) {
  for (std::int64_t l = 0; l <= 10; ++l) {
    LinearForm f = linearize_odd(l);
    EXPECT_EQ(f.terms().size(), static_cast<std::size_t>(l + 1));
    EXPECT_TRUE(f.constant().is_zero());
  }
  for (std::int64_t l = 1; l <= 10; ++l) {
    LinearForm f = linearize_even(l);
    EXPECT_LE(f.terms().size(), static_cast<std::size_t>(2 * l));
    EXPECT_FALSE(f.constant().is_zero());
    for (const auto& [key, coeff] : f.terms()) EXPECT_FALSE(coeff.is_zero());
  }
}

TEST(LinearizeTest, OddDenominatorsDividePowerOfTwo) {
  for (std::int64_t l = 0; l <= 12; ++l) {
    const Integer scale = pow2(static_cast<std::uint64_t>(5 * l));
    const LinearForm f = linearize_odd(l);
    for (const auto& [key, coeff] : f.terms()) {
      EXPECT_EQ(scale % coeff.den(), 0) << "l=" << l;
      EXPECT_EQ(key.shift, 0);
      EXPECT_EQ(key.multiplier % 2, 1);
    }
  }
}

TEST(LinearizeTest, EvenFormsVanishAtZero) {
  for (std::int64_t l = 1; l <= 10; ++l) {
    EXPECT_EQ(evaluate_linear_form(linearize(2 * l), 0), 0) << "l=" << l;
  }
}

TEST(LinearFormTest, MergesAndDropsZeroCoefficients) {
  LinearForm f(1);
  f.add_term({2, 0}, Rational(1, 3));
  f.add_term({2, 0}, Rational(-1, 3));
  EXPECT_TRUE(f.terms().empty());
  f.add_term({2, 1}, Rational(0));
  EXPECT_TRUE(f.terms().empty());
  f.add_term({1, 0}, Rational(1));
  f.add_term({3, 1}, Rational(1));
  f.add_term({3, 0}, Rational(1));
  std::vector<TermKey> order;
  for (const auto& [key, coeff] : f.terms()) order.push_back(key);
  EXPECT_EQ(order, (std::vector<TermKey>{{3, 0}, {3, 1}, {1, 0}}));
}

}  // namespace
}  // namespace balancing
