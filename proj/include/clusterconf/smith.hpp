#pragma once

#include <vector>

#include "clusterconf/sparse_matrix.hpp"

namespace clusterconf {

// Invariant factors of an integer matrix: the nonzero diagonal of the Smith
// normal form, positive, each dividing the next. rank = divisors.size().
struct SmithResult {
  std::vector<Int> divisors;

  std::int64_t rank() const { return static_cast<std::int64_t>(divisors.size()); }
  // Divisors > 1, i.e. the torsion coefficients this matrix contributes when
  // it is the boundary map into a group of cycles.
  std::vector<Int> nontrivial_divisors() const;
};

// Sparse elimination: unit pivots first (chosen by a Markowitz-style
// least-fill heuristic, they can never leave remainders), then Euclidean
// pivoting on the minimal remaining |entry| so intermediate entries stay
// small. The divisor chain is restored by gcd/lcm fix-up at the end.
SmithResult smith_normal_form(const SparseIntMatrix& m);

} // namespace clusterconf
