#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clusterconf/numbers.hpp"

namespace clusterconf {

// Default cap on exhaustive enumeration of set partitions: Bell(12) = 4213597
// is the largest count we are willing to materialise without an explicit
// opt-in from the caller.
inline constexpr int kDefaultEnumBound = 12;

// A partition of {1..n} into nonempty blocks. Canonical form: each block is
// sorted increasingly and blocks are ordered by their minima. n = 0 gives the
// empty partition with no blocks (the monoid unit).
class Partition {
 public:
  Partition() = default;

  // Validates and canonicalises: every element of 1..n covered exactly once,
  // no empty block. Throws invalid_input on overlap, gap, out-of-range
  // elements or empty blocks.
  Partition(int n, std::vector<std::vector<int>> blocks);

  int size() const { return n_; }                      // number of elements
  int weight() const { return static_cast<int>(blocks_.size()); } // number of blocks
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  bool empty() const { return n_ == 0; }

  // Multiset of block sizes, sorted increasingly.
  std::vector<int> profile() const;

  // Index of the block containing element x (1-based element, 0-based index).
  int block_of(int x) const;

  bool operator==(const Partition&) const = default;
  // Lexicographic on (n, blocks); gives a deterministic total order.
  bool operator<(const Partition& other) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// Monoid product: shift every element of the second partition up by the size
// of the first and append its blocks. Strictly associative with the empty
// partition as unit.
Partition stack(const Partition& a, const Partition& b);

// Delete block i (0-based) and relabel the remaining elements by the unique
// order-preserving bijection onto {1..n-|block i|}.
Partition remove_block(const Partition& p, int i);

// Straddle criterion: p (nonempty) is indecomposable iff for every cut
// 1 <= m < n some block contains elements both <= m and > m. The empty
// partition is decomposable by convention (empty product).
bool is_indecomposable(const Partition& p);

// Unique factorisation into indecomposables: cut at every m where no block
// straddles, relabel each segment. Empty partition yields the empty list.
// stack() over the result returns the input.
std::vector<Partition> factorize(const Partition& p);

// Largest weight among the indecomposable factors; 0 for the empty partition.
int filtration_level(const Partition& p);

// An indecomposable partition ("entanglement type") with its weight and
// profile cached. Construction validates indecomposability.
class EntanglementType {
 public:
  explicit EntanglementType(Partition p);

  const Partition& partition() const { return partition_; }
  int size() const { return partition_.size(); }       // number of elements
  int weight() const { return weight_; }               // number of blocks
  const std::vector<int>& profile() const { return profile_; }

  bool operator==(const EntanglementType&) const = default;
  bool operator<(const EntanglementType& other) const {
    return partition_ < other.partition_;
  }

 private:
  Partition partition_;
  int weight_ = 0;
  std::vector<int> profile_;
};

// All partitions of {1..n} in canonical order (restricted-growth order).
// Throws infeasible if n exceeds the bound. Count = Bell(n).
std::vector<Partition> enumerate_partitions(int n, int bound = kDefaultEnumBound);

// All partitions of {1..n} whose block sizes all lie in `sizes`. Much smaller
// than Bell(n) when sizes is restrictive, so it only checks n <= size bound
// loosely via the same cap on n.
std::vector<Partition> enumerate_partitions_with_sizes(
    int n, const std::vector<int>& sizes, int bound = kDefaultEnumBound);

// Indecomposable partitions of {1..n}. Counts for n = 1..5: 1, 1, 2, 6, 22.
std::vector<EntanglementType> enumerate_types(int n, int bound = kDefaultEnumBound);

// Indecomposable partitions of {1..w*k} all of whose blocks have size k
// (weight w). For k = 1 this is empty for w >= 2 and the singleton for w = 1.
std::vector<EntanglementType> enumerate_types_uniform(int k, int w,
                                                      int bound = kDefaultEnumBound);

// Bell numbers Bell(0..n_max) via the Bell triangle.
std::vector<Int> bell_numbers(int n_max);

// Counts of indecomposables by series inversion of the counting power series:
// with no k, entry [n] = #{indecomposable partitions of n}, from
// sum P_n x^n = 1 / (1 - sum E_n x^n) and P_n = Bell(n). With k, entry [w] =
// #{k-uniform indecomposables of weight w}, with totals (wk)!/(k!^w w!).
// Index 0 is unused and set to 0. n_max <= 30.
std::vector<Int> count_types_by_inversion(int n_max, std::optional<int> k = std::nullopt);

// Text form: blocks joined by '|', elements by ','; e.g. "1,3|2". The empty
// partition prints as the empty string.
std::string to_text(const Partition& p);
Partition partition_from_text(const std::string& text);

} // namespace clusterconf
