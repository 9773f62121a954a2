#pragma once

// Linearization of powers: B_n^l as a rational combination of B_{j n},
// B_{j (n+1)} and a constant.

#include <cstdint>
#include <map>
#include <string>

#include "balancing/exact.hpp"

namespace balancing {

/// Index j * (n + shift) of one term. shift is 0 or 1.
struct TermKey {
  std::int64_t multiplier = 1;
  int shift = 0;

  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Canonical term order: multiplier descending, then shift ascending.
struct TermKeyOrder {
  bool operator()(const TermKey& x, const TermKey& y) const {
    if (x.multiplier != y.multiplier) return x.multiplier > y.multiplier;
    return x.shift < y.shift;
  }
};

/// value_at(n) = constant + sum over terms of coeff * B_{multiplier * (n + shift)}.
/// Stored coefficients are never zero.
class LinearForm {
 public:
  using Terms = std::map<TermKey, Rational, TermKeyOrder>;

  explicit LinearForm(std::int64_t power = 1) : power_(power) {}

  std::int64_t power() const { return power_; }
  const Rational& constant() const { return constant_; }
  const Terms& terms() const { return terms_; }

  /// Adds coeff to the coefficient at key; drops the key if the sum is zero.
  void add_term(TermKey key, const Rational& coeff);
  void set_constant(Rational c) { constant_ = std::move(c); }

  /// Coefficient at key, zero when absent.
  Rational coefficient(TermKey key) const;

  /// Exact value at n; a correct form gives an integer.
  Rational value_at(std::int64_t n) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::int64_t power_;
  Rational constant_;
  Terms terms_;
};

/// B_n^{2l+1} = 2^{-5l} sum_{s=0}^{l} (-1)^s C(2l+1, s) B_{(2l+1-2s) n}.
LinearForm linearize_odd(std::int64_t l);

/// B_n^{2l} for l >= 1. The constant is (-1)^l C(2l, l) / 2^{5l}.
LinearForm linearize_even(std::int64_t l);

/// B_n^l for l >= 1, dispatching on parity.
LinearForm linearize(std::int64_t l);

/// value_at(n) as an Integer; InconsistencyError if it is not integral.
Integer evaluate_linear_form(const LinearForm& form, std::int64_t n);

/// e.g. "(1/32)*B(3n) - (3/32)*B(n)"
std::string render(const LinearForm& form);

}  // namespace balancing
