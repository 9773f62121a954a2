#include "balancing/laurent.hpp"

#include "balancing/linearize.hpp"

namespace balancing {

LaurentPoly LaurentPoly::monomial(const QuadElem& c, std::int64_t exponent) {
  LaurentPoly p;
  p.accumulate(exponent, c);
  return p;
}

QuadElem LaurentPoly::coefficient(std::int64_t exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? QuadElem{} : it->second;
}

void LaurentPoly::accumulate(std::int64_t exponent, const QuadElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

QuadElem LaurentPoly::evaluate(const QuadElem& x) const {
  QuadElem sum;
  for (const auto& [e, c] : coeffs_) {
    QuadElem xp = e >= 0 ? quad_pow(x, e) : quad_pow(x.inverse(), -e);
    sum += c * xp;
  }
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  for (const auto& [e, c] : q.coeffs_) accumulate(e, c);
  return *this;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  r += q;
  return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  r -= q;
  return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [e1, c1] : p.coeffs_) {
    for (const auto& [e2, c2] : q.coeffs_) r.accumulate(e1 + e2, c1 * c2);
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly lp_scale(const LaurentPoly& p, const QuadElem& c) {
  return p * LaurentPoly::constant(c);
}

LaurentPoly lp_pow(const LaurentPoly& p, std::int64_t e) {
  require_at_least(e, 0, "exponent");
  LaurentPoly result = LaurentPoly::constant(1);
  LaurentPoly base = p;
  for (auto u = static_cast<std::uint64_t>(e); u != 0; u >>= 1U) {
    if (u & 1U) result *= base;
    if (u > 1) base *= base;
  }
  return result;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second) + ")*X^" + std::to_string(it->first);
  }
  return out;
}

LaurentPoly laurent_difference(std::int64_t e) {
  return LaurentPoly::monomial(1, e) - LaurentPoly::monomial(1, -e);
}

namespace {

// 1 / (4 sqrt 2) = sqrt 2 / 8
const QuadElem& inv_four_sqrt2() {
  static const QuadElem v{0, Rational(1, 8)};
  return v;
}

}  // namespace

LaurentPoly balancing_as_laurent(std::int64_t multiplier, int shift) {
  const std::int64_t k = multiplier * shift;
  LaurentPoly p = LaurentPoly::monomial(quad_pow(QuadElem::alpha(), k), multiplier) -
                  LaurentPoly::monomial(quad_pow(QuadElem::beta(), k), -multiplier);
  return lp_scale(p, inv_four_sqrt2());
}

bool verify_odd_theorem(std::int64_t l) {
  require_at_least(l, 0, "l");
  const auto ul = static_cast<std::uint64_t>(l);
  const LaurentPoly lhs = lp_pow(laurent_difference(1), 2 * l + 1);
  LaurentPoly rhs;
  for (std::uint64_t s = 0; s <= ul; ++s) {
    Integer c = binomial(2 * ul + 1, s);
    if (s % 2 == 1) c = -c;
    rhs += lp_scale(laurent_difference(static_cast<std::int64_t>(2 * (ul - s) + 1)),
                    QuadElem(Rational(c)));
  }
  return (lhs - rhs).is_zero();
}

bool verify_linear_form(const LinearForm& form) {
  const std::int64_t power = form.power();
  require_at_least(power, 1, "power");
  const QuadElem scale{Rational(pow2(5 * static_cast<std::uint64_t>(power / 2)))};

  const LaurentPoly b_n = balancing_as_laurent(1, 0);
  const LaurentPoly lhs = lp_scale(lp_pow(b_n, power), scale);

  LaurentPoly rhs = LaurentPoly::constant(QuadElem(form.constant()));
  for (const auto& [key, coeff] : form.terms()) {
    rhs += lp_scale(balancing_as_laurent(key.multiplier, key.shift), QuadElem(coeff));
  }
  rhs = lp_scale(rhs, scale);
  return (lhs - rhs).is_zero();
}

bool verify_even_theorem(std::int64_t l) { return verify_linear_form(linearize_even(l)); }

bool verify_lemma_identity(std::int64_t m) {
  require_at_least(m, 2, "m");
  const QuadElem alpha = QuadElem::alpha();
  const QuadElem beta = QuadElem::beta();
  const QuadElem a_m = quad_pow(alpha, m);
  const QuadElem b_m = quad_pow(beta, m);
  const QuadElem alpha_minus_beta = alpha - beta;

  // alpha^{(k-d)m} = K * beta^{dm},  beta^{(k-d)m} = K^{-1} * alpha^{dm}
  auto shifted_difference = [&](std::int64_t d) {
    return LaurentPoly::monomial(quad_pow(beta, d * m), 1) -
           LaurentPoly::monomial(quad_pow(alpha, d * m), -1);
  };

  const LaurentPoly k0 = shifted_difference(0);
  const LaurentPoly k1 = shifted_difference(1);
  const LaurentPoly k2 = shifted_difference(2);

  LaurentPoly identity = lp_scale(k0, alpha_minus_beta);
  identity -= lp_scale(k1, QuadElem(6) * (a_m - b_m));
  identity += lp_scale(k1, QuadElem(2) * (quad_pow(alpha, m - 1) - quad_pow(beta, m - 1)));
  identity += lp_scale(k2, alpha_minus_beta);
  return identity.is_zero();
}

}  // namespace balancing
