#include "balancing/summation.hpp"

#include <gtest/gtest.h>

#include "balancing/sequences.hpp"

namespace balancing {
namespace {

// Test-local oracle: direct addition of B_{km + r}.
Integer direct_sum(std::int64_t m, std::int64_t r, std::int64_t n) {
  Integer total = 0;
  for (std::int64_t k = 0; k <= n; ++k) total += balancing(k * m + r);
  return total;
}

TEST(GfParamsTest, SpotValues) {
  GFParams p1 = gf_params(1);
  EXPECT_EQ(p1.numer, 1);
  EXPECT_EQ(p1.middle, 6);
  GFParams p2 = gf_params(2);
  EXPECT_EQ(p2.numer, 6);
  EXPECT_EQ(p2.middle, 34);
  GFParams p3 = gf_params(3);
  EXPECT_EQ(p3.numer, 35);
  EXPECT_EQ(p3.middle, 198);
  EXPECT_EQ(p3.m, 3);
  EXPECT_THROW(gf_params(0), std::invalid_argument);
}

TEST(GfParamsTest, MiddleIsTwiceLucasBalancing) {
  for (std::int64_t m = 1; m <= 40; ++m) {
    GFParams p = gf_params(m);
    EXPECT_EQ(p.middle, 2 * lucas_balancing(m));
    EXPECT_GE(p.middle, 6);
    EXPECT_GT(p.middle * p.middle - 4, 0);
    EXPECT_GE(p.middle - 2, 4);  // denominator of the closed sums
  }
}

TEST(SubsequenceGfTest, CoefficientRecurrence) {
  // 204 - 34*6 + 0 = 0
  EXPECT_EQ(balancing(4) - 34 * balancing(2) + balancing(0), 0);
  EXPECT_TRUE(subsequence_gf_check(1, 10));
  EXPECT_TRUE(subsequence_gf_check(2, 10));
  EXPECT_TRUE(subsequence_gf_check(5, 8));
  for (std::int64_t m = 1; m <= 12; ++m) EXPECT_TRUE(subsequence_gf_check(m, 25));
  EXPECT_THROW(subsequence_gf_check(1, 1), std::invalid_argument);
}

TEST(ClosedSumTest, SpotValues) {
  EXPECT_EQ(closed_sum(1, 4), 246);
  EXPECT_EQ(closed_sum(1, 0), 0);
  EXPECT_EQ(closed_sum(2, 2), 210);
  EXPECT_THROW(closed_sum(0, 3), std::invalid_argument);
  EXPECT_THROW(closed_sum(1, -1), std::invalid_argument);
}

TEST(ClosedSumTest, MatchesDirectSum) {
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t n = 0; n <= 30; ++n) {
      ASSERT_EQ(closed_sum(m, n), direct_sum(m, 0, n)) << "m=" << m << " n=" << n;
      ASSERT_EQ(closed_sum(m, n), brute_force_power_sum(m, 1, n));
    }
  }
}

TEST(ShiftedClosedSumTest, SpotValues) {
  EXPECT_EQ(shifted_closed_sum(2, 1, 1), 36);
  // B_0 + B_3 + B_6 = 0 + 35 + 6930
  EXPECT_EQ(shifted_closed_sum(3, 0, 2), 6965);
  EXPECT_EQ(shifted_closed_sum(3, 0, 2), closed_sum(3, 2));
  EXPECT_EQ(shifted_closed_sum(1, 0, 0), 0);
  EXPECT_THROW(shifted_closed_sum(1, -1, 0), std::invalid_argument);
}

TEST(ShiftedClosedSumTest, MatchesDirectSum) {
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t r = 0; r <= 8; ++r) {
      for (std::int64_t n = 0; n <= 20; ++n) {
        ASSERT_EQ(shifted_closed_sum(m, r, n), direct_sum(m, r, n))
            << "m=" << m << " r=" << r << " n=" << n;
      }
    }
  }
}

TEST(PowerSumTest, SpotValues) {
  EXPECT_EQ(power_sum(1, 3, 2), 217);
  EXPECT_EQ(power_sum(1, 2, 2), 37);
  EXPECT_EQ(power_sum(2, 2, 2), 41652);
  EXPECT_EQ(brute_force_power_sum(1, 1, 4), 246);
  EXPECT_EQ(brute_force_power_sum(2, 1, 2), 210);
  EXPECT_EQ(brute_force_power_sum(1, 5, 0), 0);
  EXPECT_THROW(power_sum(1, 0, 3), std::invalid_argument);
}

TEST(PowerSumTest, MatchesBruteForce) {
  for (std::int64_t m = 1; m <= 4; ++m) {
    for (std::int64_t l = 1; l <= 6; ++l) {
      for (std::int64_t n = 0; n <= 15; ++n) {
        ASSERT_EQ(power_sum(m, l, n), brute_force_power_sum(m, l, n))
            << "m=" << m << " l=" << l << " n=" << n;
      }
    }
  }
}

TEST(PowerSumTest, Telescopes) {
  for (std::int64_t m = 1; m <= 3; ++m) {
    for (std::int64_t l = 1; l <= 5; ++l) {
      for (std::int64_t n = 1; n <= 15; ++n) {
        Integer step = power_sum(m, l, n) - power_sum(m, l, n - 1);
        Integer expected;
        Integer b = balancing(n * m);
        mpz_pow_ui(expected.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(l));
        ASSERT_EQ(step, expected) << "m=" << m << " l=" << l << " n=" << n;
      }
    }
  }
}

TEST(PowerSumFormulaTest, LinearCaseHasTheClassicalShape) {
  ClosedSumExpr e = power_sum_formula(1, 1);
  ASSERT_EQ(e.bterms.size(), 2U);
  EXPECT_EQ(e.bterms[0], (BTerm{Rational(1, 4), 1, 1}));
  EXPECT_EQ(e.bterms[1], (BTerm{Rational(-1, 4), 1, 0}));
  EXPECT_TRUE(e.linear_coeff.is_zero());
  EXPECT_EQ(e.constant, Rational(-1, 4));
  EXPECT_EQ(render(e), "(1/4)*B(n+1) - (1/4)*B(n) - 1/4");
  EXPECT_EQ(evaluate_closed_sum(e, 4), 246);

  // (B(2n+2) - B(2n) - B_2) / 32
  ClosedSumExpr e2 = power_sum_formula(2, 1);
  EXPECT_EQ(render(e2), "(1/32)*B(2n+2) - (1/32)*B(2n) - 3/16");
}

TEST(PowerSumFormulaTest, EvenPowerCarriesLinearTerm) {
  ClosedSumExpr e = power_sum_formula(1, 2);
  EXPECT_EQ(e.linear_coeff, Rational(-1, 16));
  EXPECT_EQ(evaluate_closed_sum(e, 0), 0);
  EXPECT_EQ(evaluate_closed_sum(e, 2), 37);
}

TEST(PowerSumFormulaTest, AgreesWithPowerSum) {
  for (std::int64_t m = 1; m <= 4; ++m) {
    for (std::int64_t l = 1; l <= 6; ++l) {
      const ClosedSumExpr e = power_sum_formula(m, l);
      EXPECT_EQ(e.m, m);
      EXPECT_EQ(e.power, l);
      for (std::size_t i = 1; i < e.bterms.size(); ++i) {
        const BTerm& a = e.bterms[i - 1];
        const BTerm& b = e.bterms[i];
        EXPECT_TRUE(a.stride > b.stride || (a.stride == b.stride && a.offset > b.offset));
      }
      for (std::int64_t n = 0; n <= 15; ++n) {
        ASSERT_EQ(evaluate_closed_sum(e, n), power_sum(m, l, n))
            << "m=" << m << " l=" << l << " n=" << n;
      }
    }
  }
}

}  // namespace
}  // namespace balancing
