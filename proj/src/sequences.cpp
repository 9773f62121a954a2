#include "balancing/sequences.hpp"

#include <array>

namespace balancing {

namespace {

Integer iterate(Integer x0, Integer x1, std::int64_t n) {
  if (n == 0) return x0;
  for (std::int64_t i = 1; i < n; ++i) {
    Integer next = 6 * x1 - x0;
    x0 = std::move(x1);
    x1 = std::move(next);
  }
  return x1;
}

using Mat2 = std::array<Integer, 4>;  // row-major [[0, 1], [2, 3]]

Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Mat2 companion_power(std::int64_t n) {
  Mat2 result{1, 0, 0, 1};
  Mat2 base{6, -1, 1, 0};
  for (auto e = static_cast<std::uint64_t>(n); e != 0; e >>= 1U) {
    if (e & 1U) result = mul(result, base);
    if (e > 1) base = mul(base, base);
  }
  return result;
}

}  // namespace

SeqTable::SeqTable(Sequence seq, std::int64_t upto) : seq_(seq) {
  require_at_least(upto, 0, "upto");
  values_.reserve(static_cast<std::size_t>(upto) + 1);
  values_.emplace_back(seq == Sequence::kBalancing ? 0 : 1);
  if (upto >= 1) values_.emplace_back(seq == Sequence::kBalancing ? 1 : 3);
  for (std::size_t i = 2; i <= static_cast<std::size_t>(upto); ++i) {
    values_.emplace_back(6 * values_[i - 1] - values_[i - 2]);
  }
}

Integer balancing(std::int64_t n) {
  require_at_least(n, 0, "n");
  return iterate(0, 1, n);
}

Integer lucas_balancing(std::int64_t n) {
  require_at_least(n, 0, "n");
  return iterate(1, 3, n);
}

Integer balancing_fast(std::int64_t n) {
  require_at_least(n, 0, "n");
  // M^n = [[B_{n+1}, -B_n], [B_n, -B_{n-1}]]
  return companion_power(n)[2];
}

Integer lucas_balancing_fast(std::int64_t n) {
  require_at_least(n, 0, "n");
  // (x_{n+1}, x_n) = M^n (x_1, x_0) for any solution of the recurrence
  const Mat2 p = companion_power(n);
  return p[2] * 3 + p[3];
}

Integer balancing_binet(std::int64_t n) {
  require_at_least(n, 0, "n");
  QuadElem p = quad_pow(QuadElem::alpha(), n);
  return (p.b() / Rational(2)).to_integer();
}

Integer lucas_balancing_binet(std::int64_t n) {
  require_at_least(n, 0, "n");
  return quad_pow(QuadElem::alpha(), n).a().to_integer();
}

std::vector<Integer> gf_coefficients(std::int64_t count) {
  require_at_least(count, 1, "count");
  // Series division of z by 1 - 6z + z^2: c_n = [n == 1] + 6 c_{n-1} - c_{n-2}.
  std::vector<Integer> c(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer v = (i == 1) ? 1 : 0;
    if (i >= 1) v += 6 * c[i - 1];
    if (i >= 2) v -= c[i - 2];
    c[i] = v;
  }
  return c;
}

}  // namespace balancing
