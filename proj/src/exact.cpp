#include "balancing/exact.hpp"

#include <ostream>
#include <utility>

namespace balancing {

void require_at_least(std::int64_t value, std::int64_t minimum, const char* name) {
  if (value < minimum) {
    throw std::invalid_argument(std::string(name) + " must be >= " + std::to_string(minimum) +
                                ", got " + std::to_string(value));
  }
}

Integer exact_div(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw ArithmeticError("inexact division: " + num.get_str() + " / " + den.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer pow2(std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

// Rational

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw ArithmeticError("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
}

Integer Rational::to_integer() const {
  if (den_ != 1) throw ArithmeticError("not an integer: " + to_string(*this));
  return num_;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  bool ok = false;
  try {
    if (slash == std::string::npos) {
      ok = num.set_str(text, 10) == 0;
    } else {
      ok = num.set_str(text.substr(0, slash), 10) == 0 &&
           den.set_str(text.substr(slash + 1), 10) == 0;
    }
  } catch (const std::invalid_argument&) {
    ok = false;
  }
  if (!ok) throw std::invalid_argument("malformed rational: '" + text + "'");
  return {num, den};
}

Rational operator+(const Rational& x, const Rational& y) {
  if (x.den_ == y.den_) return {x.num_ + y.num_, x.den_};
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  return {x.num_ * y.num_, x.den_ * y.den_};
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw ArithmeticError("division by zero");
  return {x.num_ * y.den_, x.den_ * y.num_};
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator<(const Rational& x, const Rational& y) {
  return x.num_ * y.den_ < y.num_ * x.den_;
}

Rational rat_add(const Rational& x, const Rational& y) { return x + y; }
Rational rat_mul(const Rational& x, const Rational& y) { return x * y; }
Rational rat_div(const Rational& x, const Rational& y) { return x / y; }

std::string to_string(const Rational& x) {
  if (x.is_integer()) return x.num().get_str();
  return x.num().get_str() + "/" + x.den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << to_string(x); }

// QuadElem

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  return {x.a_ * y.a_ + Rational(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw ArithmeticError("QuadElem has no inverse: " + to_string(*this));
  return {a_ / n, -b_ / n};
}

QuadElem quad_mul(const QuadElem& x, const QuadElem& y) { return x * y; }

QuadElem quad_pow(const QuadElem& x, std::int64_t n) {
  require_at_least(n, 0, "exponent");
  QuadElem result{1};
  QuadElem base = x;
  auto e = static_cast<std::uint64_t>(n);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string to_string(const QuadElem& x) {
  return to_string(x.a()) + " + " + to_string(x.b()) + "*sqrt2";
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << to_string(x); }

}  // namespace balancing
