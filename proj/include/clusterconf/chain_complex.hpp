#pragma once

#include <map>
#include <string>
#include <vector>

#include "clusterconf/smith.hpp"
#include "clusterconf/sparse_matrix.hpp"

namespace clusterconf {

// A finitely generated abelian group: Z^betti + sum Z/torsion[i], with the
// torsion coefficients forming a divisibility chain d1 | d2 | ... , each >= 2.
struct AbelianGroup {
  std::int64_t betti = 0;
  std::vector<Int> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
  std::string to_text() const; // "Z^2 + Z/2 + Z/6", "0", ...
};

// Degreewise collection of abelian groups; absent degrees are zero.
struct GradedAbelianGroup {
  std::map<int, AbelianGroup> groups;

  const AbelianGroup& at(int degree) const;
  bool operator==(const GradedAbelianGroup&) const = default;
};

// Direct sum in invariant-factor form: torsion multisets recombine through
// their prime-power decompositions so the result is again a divisor chain
// (Z/4 + Z/6 = Z/2 + Z/12).
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
GradedAbelianGroup direct_sum(const GradedAbelianGroup& a, const GradedAbelianGroup& b);
GradedAbelianGroup shifted(const GradedAbelianGroup& g, int amount);

// A bounded chain complex of free Z-modules. Degrees run 0..top; each degree
// carries its generator labels and the boundary matrix into the degree below
// (rows = generators of degree q-1, cols = generators of degree q).
// d(q) o d(q+1) = 0 is verified at construction; a violation throws
// consistency_error since every downstream number would be garbage.
class ChainComplex {
 public:
  ChainComplex(std::vector<std::vector<std::string>> generator_labels,
               std::vector<SparseIntMatrix> boundaries);

  int top_degree() const { return static_cast<int>(labels_.size()) - 1; }
  std::int64_t rank(int degree) const; // number of generators, 0 outside range
  const std::vector<std::string>& labels(int degree) const;
  // Boundary out of `degree` (into degree-1). Degree 0 has the empty matrix.
  const SparseIntMatrix& boundary(int degree) const;

  // Homology in one degree or all of them. Betti_q = rank C_q - rank d_q -
  // rank d_{q+1}; torsion_q = invariant factors of d_{q+1} that exceed 1.
  AbelianGroup homology(int degree) const;
  GradedAbelianGroup homology() const;

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<SparseIntMatrix> boundaries_; // boundaries_[q]: C_q -> C_{q-1}
};

} // namespace clusterconf
