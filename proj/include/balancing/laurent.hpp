#pragma once

// Sparse Laurent polynomials in one variable X over Q(sqrt 2), and the
// identity verifiers built on them.
//
// The verifiers substitute X = alpha^n (or alpha^{km}), so that beta^n is
// X^{-1}. A polynomial identity in X then holds for every n at once.

#include <cstdint>
#include <map>
#include <string>

#include "balancing/exact.hpp"

namespace balancing {

class LinearForm;

class LaurentPoly {
 public:
  using Coeffs = std::map<std::int64_t, QuadElem>;

  LaurentPoly() = default;
  /// c * X^exponent
  static LaurentPoly monomial(const QuadElem& c, std::int64_t exponent);
  static LaurentPoly constant(const QuadElem& c) { return monomial(c, 0); }

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  QuadElem coefficient(std::int64_t exponent) const;

  /// Value at X = x; x must be invertible when negative exponents occur.
  QuadElem evaluate(const QuadElem& x) const;

  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  LaurentPoly operator-() const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q) { return *this += -q; }
  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void accumulate(std::int64_t exponent, const QuadElem& c);

  Coeffs coeffs_;  // no zero values
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_scale(const LaurentPoly& p, const QuadElem& c);
LaurentPoly lp_pow(const LaurentPoly& p, std::int64_t e);

std::string to_string(const LaurentPoly& p);

/// X^e - X^{-e}
LaurentPoly laurent_difference(std::int64_t e);

/// B_{j(n+shift)} in terms of X = alpha^n:
/// (alpha^{j shift} X^j - beta^{j shift} X^{-j}) / (4 sqrt 2).
LaurentPoly balancing_as_laurent(std::int64_t multiplier, int shift);

/// (X - 1/X)^{2l+1} against sum_{s<=l} (-1)^s C(2l+1, s) (X^{2l+1-2s} - X^{-(2l+1-2s)}).
bool verify_odd_theorem(std::int64_t l);

/// Encodes `form` as a Laurent polynomial and compares with
/// ((X - 1/X) / (4 sqrt 2))^power, both scaled by 2^{5 floor(power/2)}.
bool verify_linear_form(const LinearForm& form);

/// verify_linear_form(linearize_even(l)).
bool verify_even_theorem(std::int64_t l);

/// The coefficient recurrence of the B_{km} generating function,
///   B_{km} - 6 B_m B_{(k-1)m} + 2 B_{m-1} B_{(k-1)m} + B_{(k-2)m} = 0,
/// multiplied by (alpha - beta)^2 and written with K = alpha^{km}. True iff
/// the result is the zero polynomial in K, i.e. the recurrence holds for all k.
bool verify_lemma_identity(std::int64_t m);

}  // namespace balancing
