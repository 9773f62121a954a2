#pragma once

// Exact scalars: arbitrary-precision integers (GMP), canonical rationals and
// the quadratic field Q(sqrt 2).

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace balancing {

using Integer = mpz_class;

/// Raised on division by zero, inexact integer division and similar
/// checked-arithmetic failures.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a closed form disagrees with the exact value it must equal.
/// Indicates a formula bug, never bad input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws std::invalid_argument unless value >= minimum.
void require_at_least(std::int64_t value, std::int64_t minimum, const char* name);

/// num / den, throwing ArithmeticError unless den divides num.
Integer exact_div(const Integer& num, const Integer& den);

/// Binomial coefficient C(n, k); zero when k > n.
Integer binomial(std::uint64_t n, std::uint64_t k);

Integer pow2(std::uint64_t e);

std::string to_string(const Integer& x);

/// Rational number kept in lowest terms with a positive denominator.
/// Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : num_(v), den_(1) {}  // NOLINT
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  /// Numerator when the denominator is 1; ArithmeticError otherwise.
  Integer to_integer() const;

  /// Parses "p" or "p/q".
  static Rational parse(const std::string& text);

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const;

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y);

 private:
  Integer num_;
  Integer den_;
};

Rational rat_add(const Rational& x, const Rational& y);
Rational rat_mul(const Rational& x, const Rational& y);
Rational rat_div(const Rational& x, const Rational& y);

/// "num/den", or "num" when den == 1.
std::string to_string(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

/// a + b*sqrt(2) with rational a, b.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadElem(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadElem(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  /// 3 + 2 sqrt 2
  static QuadElem alpha() { return {3, 2}; }
  /// 3 - 2 sqrt 2
  static QuadElem beta() { return {3, -2}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadElem conj() const { return {a_, -b_}; }
  /// a^2 - 2 b^2
  Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }
  /// ArithmeticError when the norm is zero (only for 0 itself).
  QuadElem inverse() const;

  friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * y.inverse(); }
  QuadElem operator-() const { return {-a_, -b_}; }

  QuadElem& operator+=(const QuadElem& y) { return *this = *this + y; }
  QuadElem& operator-=(const QuadElem& y) { return *this = *this - y; }
  QuadElem& operator*=(const QuadElem& y) { return *this = *this * y; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

 private:
  Rational a_;
  Rational b_;
};

QuadElem quad_mul(const QuadElem& x, const QuadElem& y);
QuadElem quad_pow(const QuadElem& x, std::int64_t n);

std::string to_string(const QuadElem& x);
std::ostream& operator<<(std::ostream& os, const QuadElem& x);

}  // namespace balancing
