#pragma once

#include <map>
#include <string>
#include <vector>

#include "clusterconf/chain_complex.hpp"
#include "clusterconf/partition.hpp"

namespace clusterconf {

// A system of finite pointed label sets, one per block size: counts[k] is the
// number of NON-basepoint labels of size k (absent k means only the
// basepoint, so size-k blocks cannot occur in canonical monoid elements).
struct DiscreteLabels {
  std::map<int, int> counts;

  int count_for(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
  std::string to_text() const; // "1:2,2:1"
  static DiscreteLabels from_text(const std::string&);
};

// Canonical element of the labelled discrete monoid: a partition together
// with one non-basepoint label per block (labels follow block order, values
// 0-based). Basepoint-labelled blocks never appear in canonical form: the
// defining relation deletes such a block and down-shifts, so they are
// quotiented away before elements are ever stored.
struct DElement {
  Partition xi;
  std::vector<int> labels;

  int size() const { return xi.size(); } // additive grading
  bool is_identity() const { return xi.empty(); }
  bool operator==(const DElement&) const = default;
  bool operator<(const DElement& other) const {
    if (!(xi == other.xi)) return xi < other.xi;
    return labels < other.labels;
  }
  std::string to_text() const; // "1,3|2:0,1" (partition ":" labels)
};

// Validates label ranges against the label system.
DElement make_element(const DiscreteLabels& labels, Partition xi,
                      std::vector<int> block_labels);

// Monoid product: stack the partitions, concatenate the labels.
DElement multiply(const DElement& a, const DElement& b);

// Unique factorisation into indecomposable-based elements; multiplying the
// factors back gives the input. Identity decomposes to the empty list.
std::vector<DElement> decompose_monoid_element(const DElement& m);

// All canonical elements with |xi| = m, in deterministic order (partition
// enumeration order, then label odometer). m = 0 gives just the identity.
std::vector<DElement> enumerate_elements(const DiscreteLabels& labels, int m,
                                         int bound = kDefaultEnumBound);

// Number of free generators in grading n: elements whose partition is
// indecomposable, i.e. sum over types e of size n of prod_i counts[k_i].
Int free_generator_count(const DiscreteLabels& labels, int n,
                         int bound = kDefaultEnumBound);

// Weight-n piece of the normalized bar complex of the monoid. Simplicial
// degree s holds tuples (m_1, ..., m_s) of non-identity elements with total
// size n; the differential keeps only the inner face maps
// sum_{i=1}^{s-1} (-1)^i (merge at i), because the outer faces land in lower
// weight (the graded augmentation kills positive-weight elements). Since
// every factor has size >= 1, s <= n and every degree is finite.
ChainComplex build_bar_complex(const DiscreteLabels& labels, int n,
                               int max_degree = -1,
                               int bound = kDefaultEnumBound);

} // namespace clusterconf
