#pragma once

// Balancing numbers B_n (0, 1, 6, 35, ...) and Lucas-balancing numbers C_n
// (1, 3, 17, 99, ...). Both satisfy x_n = 6 x_{n-1} - x_{n-2}.

#include <cstdint>
#include <vector>

#include "balancing/exact.hpp"

namespace balancing {

enum class Sequence { kBalancing, kLucasBalancing };

/// Table of x_0..x_N for one of the two sequences.
class SeqTable {
 public:
  /// Builds values up to and including index `upto` by the recurrence.
  SeqTable(Sequence seq, std::int64_t upto);

  Sequence sequence() const { return seq_; }
  std::int64_t upto() const { return static_cast<std::int64_t>(values_.size()) - 1; }
  const Integer& operator[](std::int64_t n) const { return values_.at(static_cast<std::size_t>(n)); }
  const std::vector<Integer>& values() const { return values_; }

 private:
  Sequence seq_;
  std::vector<Integer> values_;
};

/// B_n by the iterative recurrence. O(n) big-integer steps.
Integer balancing(std::int64_t n);

/// C_n = (alpha^n + beta^n) / 2 by the iterative recurrence.
Integer lucas_balancing(std::int64_t n);

/// B_n from a power of the companion matrix [[6, -1], [1, 0]].
Integer balancing_fast(std::int64_t n);

/// B_n via alpha^n = a + b sqrt 2; B_n = b / 2.
Integer balancing_binet(std::int64_t n);

/// C_n from the same matrix power as balancing_fast.
Integer lucas_balancing_fast(std::int64_t n);

/// C_n as the rational part a of alpha^n = a + b sqrt 2.
Integer lucas_balancing_binet(std::int64_t n);

/// First `count` coefficients of z / (1 - 6z + z^2).
std::vector<Integer> gf_coefficients(std::int64_t count);

}  // namespace balancing
