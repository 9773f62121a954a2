#include "balancing/summation.hpp"

#include <algorithm>
#include <map>

#include "balancing/linearize.hpp"
#include "balancing/render_util.hpp"
#include "balancing/sequences.hpp"

namespace balancing {

namespace {

// 2 C_m - 2, the common denominator of the equally spaced sums.
Integer sum_denominator(std::int64_t m) { return 2 * lucas_balancing(m) - 2; }

Integer checked_div(const Integer& num, const Integer& den, const char* what) {
  try {
    return exact_div(num, den);
  } catch (const ArithmeticError& e) {
    throw InconsistencyError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

GFParams gf_params(std::int64_t m) {
  require_at_least(m, 1, "m");
  Integer b_m = balancing_fast(m);
  Integer middle = 6 * b_m - 2 * balancing_fast(m - 1);
  return {std::move(b_m), std::move(middle), m};
}

bool subsequence_gf_check(std::int64_t m, std::int64_t terms) {
  require_at_least(terms, 2, "N");
  const GFParams p = gf_params(m);
  std::vector<Integer> series;
  series.reserve(static_cast<std::size_t>(terms) + 1);
  for (std::int64_t k = 0; k <= terms; ++k) series.push_back(balancing_fast(k * m));
  for (std::size_t d = 0; d < static_cast<std::size_t>(terms); ++d) {
    Integer c = series[d];
    if (d >= 1) c -= p.middle * series[d - 1];
    if (d >= 2) c += series[d - 2];
    const Integer expected = (d == 1) ? p.numer : Integer(0);
    if (c != expected) return false;
  }
  return true;
}

Integer closed_sum(std::int64_t m, std::int64_t n) {
  require_at_least(m, 1, "m");
  require_at_least(n, 0, "n");
  Integer num = balancing_fast(m * (n + 1)) - balancing_fast(m * n) - balancing_fast(m);
  return checked_div(num, sum_denominator(m), "closed_sum");
}

Integer shifted_closed_sum(std::int64_t m, std::int64_t r, std::int64_t n) {
  require_at_least(m, 1, "m");
  require_at_least(r, 0, "r");
  require_at_least(n, 0, "n");
  const Integer b_r = balancing_fast(r);
  Integer num = balancing_fast(m * (n + 1) + r) - balancing_fast(m * n + r) -
                balancing_fast(m + r) + b_r;
  return checked_div(num, sum_denominator(m), "shifted_closed_sum") + b_r;
}

Integer power_sum(std::int64_t m, std::int64_t l, std::int64_t n) {
  require_at_least(m, 1, "m");
  require_at_least(n, 0, "n");
  const LinearForm form = linearize(l);
  // B_{j(km+s)} = B_{(jm)k + js}
  Rational total = form.constant() * Rational(Integer(n + 1));
  for (const auto& [key, coeff] : form.terms()) {
    total += coeff * Rational(shifted_closed_sum(key.multiplier * m, key.multiplier * key.shift, n));
  }
  if (!total.is_integer()) {
    throw InconsistencyError("power_sum(" + std::to_string(m) + ", " + std::to_string(l) + ", " +
                             std::to_string(n) + ") is not integral: " + to_string(total));
  }
  return total.num();
}

Integer brute_force_power_sum(std::int64_t m, std::int64_t l, std::int64_t n) {
  require_at_least(m, 1, "m");
  require_at_least(l, 1, "l");
  require_at_least(n, 0, "n");
  Integer total = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    Integer p;
    Integer b = balancing(k * m);
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(l));
    total += p;
  }
  return total;
}

Rational ClosedSumExpr::value_at(std::int64_t n) const {
  require_at_least(n, 0, "n");
  Rational v = linear_coeff * Rational(Integer(n + 1)) + constant;
  for (const BTerm& t : bterms) v += t.coeff * Rational(balancing_fast(t.stride * n + t.offset));
  return v;
}

ClosedSumExpr power_sum_formula(std::int64_t m, std::int64_t l) {
  require_at_least(m, 1, "m");
  const LinearForm form = linearize(l);

  struct Desc {
    bool operator()(const std::pair<std::int64_t, std::int64_t>& x,
                    const std::pair<std::int64_t, std::int64_t>& y) const {
      return x > y;
    }
  };
  std::map<std::pair<std::int64_t, std::int64_t>, Rational, Desc> merged;
  auto add = [&merged](std::int64_t stride, std::int64_t offset, const Rational& c) {
    merged[{stride, offset}] += c;
  };

  ClosedSumExpr expr;
  expr.m = m;
  expr.power = l;
  expr.linear_coeff = form.constant();
  for (const auto& [key, coeff] : form.terms()) {
    const std::int64_t stride = key.multiplier * m;
    const std::int64_t r = key.multiplier * key.shift;
    const Rational scaled = coeff / Rational(sum_denominator(stride));
    const Integer b_r = balancing_fast(r);
    add(stride, stride + r, scaled);
    add(stride, r, -scaled);
    expr.constant += scaled * Rational(b_r - balancing_fast(stride + r)) + coeff * Rational(b_r);
  }
  for (const auto& [index, c] : merged) {
    if (!c.is_zero()) expr.bterms.push_back({c, index.first, index.second});
  }
  return expr;
}

Integer evaluate_closed_sum(const ClosedSumExpr& expr, std::int64_t n) {
  Rational v = expr.value_at(n);
  if (!v.is_integer()) {
    throw InconsistencyError("closed form is not integral at n=" + std::to_string(n) + ": " +
                             to_string(v));
  }
  return v.num();
}

std::string render(const ClosedSumExpr& expr) {
  detail::SumWriter out;
  for (const BTerm& t : expr.bterms) {
    std::string index = t.stride == 1 ? "n" : std::to_string(t.stride) + "n";
    if (t.offset > 0) index += "+" + std::to_string(t.offset);
    if (t.offset < 0) index += std::to_string(t.offset);
    out.term(t.coeff, "B(" + index + ")");
  }
  out.term(expr.linear_coeff, "(n+1)");
  out.constant(expr.constant);
  return out.str();
}

}  // namespace balancing
