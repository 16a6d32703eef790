#pragma once

#include <vector>

#include "numeric.hpp"

namespace patchcount {

// Non-intersecting path instance for the three-slope square of side l:
// 2l-1 shifted diagonal paths on the dual grid.
struct PathCountProblem {
  long side = 0;

  explicit PathCountProblem(long l);
  long dimension() const { return 2 * side - 1; }
};

// Symmetric banded matrix of path counts between the shifted start and end
// vertices; every entry is a single binomial coefficient.
struct LgvMatrix {
  long side = 0;
  long dim = 0;
  std::vector<BigCount> entries;  // row-major

  const BigCount& at(long i, long j) const { return entries[i * dim + j]; }
  BigCount& at(long i, long j) { return entries[i * dim + j]; }
};

// C(n, k) for 0 <= k <= n, 0 otherwise (including negative arguments).
BigCount binomial(long long n, long long k);

LgvMatrix lgv_matrix(const PathCountProblem& problem);
LgvMatrix lgv_matrix(long side);

// Exact determinant by fraction-free elimination; all intermediate values
// stay integral. Row swaps handle zero pivots; a fully zero column yields 0.
BigCount determinant(const LgvMatrix& matrix);

// Number of reroutings of the l x l three-slope square patch.
BigCount lgv_count(long side);

}  // namespace patchcount
