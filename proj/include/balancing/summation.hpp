#pragma once

// Partial sums of equally spaced balancing numbers and of their powers.

#include <cstdint>
#include <string>
#include <vector>

#include "balancing/exact.hpp"

namespace balancing {

/// Generating function of (B_{km})_k is numer*z / (1 - middle*z + z^2).
struct GFParams {
  Integer numer;   // B_m
  Integer middle;  // 6 B_m - 2 B_{m-1} = 2 C_m
  std::int64_t m = 1;
};

GFParams gf_params(std::int64_t m);

/// Checks (1 - middle*z + z^2) * sum_{k<=N} B_{km} z^k == B_m z through degree N-1.
bool subsequence_gf_check(std::int64_t m, std::int64_t terms);

/// sum_{0<=k<=n} B_{km} = (B_{m(n+1)} - B_{mn} - B_m) / (2 C_m - 2)
Integer closed_sum(std::int64_t m, std::int64_t n);

/// sum_{0<=k<=n} B_{km+r}
///   = (B_{m(n+1)+r} - B_{mn+r} - B_{m+r} + B_r) / (2 C_m - 2) + B_r
Integer shifted_closed_sum(std::int64_t m, std::int64_t r, std::int64_t n);

/// sum_{0<=k<=n} B_{km}^l through linearization and shifted_closed_sum.
Integer power_sum(std::int64_t m, std::int64_t l, std::int64_t n);

/// Direct summation of balancing(km)^l; no closed forms involved.
Integer brute_force_power_sum(std::int64_t m, std::int64_t l, std::int64_t n);

/// coeff * B_{stride*n + offset}
struct BTerm {
  Rational coeff;
  std::int64_t stride = 1;
  std::int64_t offset = 0;

  friend bool operator==(const BTerm&, const BTerm&) = default;
};

/// Closed form in n:
///   sum(bterms) + linear_coeff * (n + 1) + constant
/// bterms are merged per (stride, offset), nonzero, and ordered by stride
/// then offset, both descending.
struct ClosedSumExpr {
  std::int64_t m = 1;
  std::int64_t power = 1;
  std::vector<BTerm> bterms;
  Rational linear_coeff;
  Rational constant;

  Rational value_at(std::int64_t n) const;

  friend bool operator==(const ClosedSumExpr&, const ClosedSumExpr&) = default;
};

ClosedSumExpr power_sum_formula(std::int64_t m, std::int64_t l);

/// value_at(n) as an Integer; InconsistencyError if it is not integral.
Integer evaluate_closed_sum(const ClosedSumExpr& expr, std::int64_t n);

/// e.g. "(1/4)*B(n+1) - (1/4)*B(n) - 1/4"
std::string render(const ClosedSumExpr& expr);

}  // namespace balancing
