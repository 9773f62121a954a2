#include "balancing/linearize.hpp"

#include "balancing/render_util.hpp"
#include "balancing/sequences.hpp"

namespace balancing {

void LinearForm::add_term(TermKey key, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational LinearForm::coefficient(TermKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational{} : it->second;
}

Rational LinearForm::value_at(std::int64_t n) const {
  require_at_least(n, 0, "n");
  Rational sum = constant_;
  for (const auto& [key, coeff] : terms_) {
    sum += coeff * Rational(balancing_fast(key.multiplier * (n + key.shift)));
  }
  return sum;
}

LinearForm linearize_odd(std::int64_t l) {
  require_at_least(l, 0, "l");
  const auto ul = static_cast<std::uint64_t>(l);
  LinearForm form(2 * l + 1);
  const Integer scale = pow2(5 * ul);
  for (std::uint64_t s = 0; s <= ul; ++s) {
    Integer c = binomial(2 * ul + 1, s);
    if (s % 2 == 1) c = -c;
    form.add_term({static_cast<std::int64_t>(2 * (ul - s) + 1), 0}, Rational(c, scale));
  }
  return form;
}

LinearForm linearize_even(std::int64_t l) {
  require_at_least(l, 1, "l");
  const auto ul = static_cast<std::uint64_t>(l);
  LinearForm form(2 * l);
  const Integer scale = pow2(5 * ul);
  for (std::uint64_t s = 0; s < ul; ++s) {
    const auto j = static_cast<std::int64_t>(2 * (ul - s));
    const Integer b_j = balancing_fast(j);
    const Integer b_half = balancing_fast(j / 2);
    Integer c = binomial(2 * ul, s);
    if (s % 2 == 1) c = -c;

    // 2 (-1)^s C(2l, s) / (2^{5l} B_j) on both B_{jn} and B_{j(n+1)}.
    Rational paired(2 * c, scale * b_j);
    form.add_term({j, 0}, paired);
    form.add_term({j, 1}, paired);
    // (-1)^{s-1} C(2l, s) B_j / (2^{5l} B_{j/2}^2) on B_{jn}.
    form.add_term({j, 0}, Rational(-c * b_j, scale * b_half * b_half));
  }
  Integer mid = binomial(2 * ul, ul);
  if (ul % 2 == 1) mid = -mid;
  form.set_constant(Rational(mid, scale));
  return form;
}

LinearForm linearize(std::int64_t l) {
  require_at_least(l, 1, "power");
  return l % 2 == 1 ? linearize_odd((l - 1) / 2) : linearize_even(l / 2);
}

Integer evaluate_linear_form(const LinearForm& form, std::int64_t n) {
  Rational v = form.value_at(n);
  if (!v.is_integer()) {
    throw InconsistencyError("linear form for power " + std::to_string(form.power()) +
                             " is not integral at n=" + std::to_string(n) + ": " + to_string(v));
  }
  return v.num();
}

std::string render(const LinearForm& form) {
  detail::SumWriter out;
  for (const auto& [key, coeff] : form.terms()) {
    std::string index = key.multiplier == 1 ? "n" : std::to_string(key.multiplier) + "n";
    if (key.shift != 0) index += "+" + std::to_string(key.multiplier * key.shift);
    out.term(coeff, "B(" + index + ")");
  }
  out.constant(form.constant());
  return out.str();
}

}  // namespace balancing
