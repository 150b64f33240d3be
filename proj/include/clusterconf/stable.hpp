#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterconf/fox_neuwirth.hpp"
#include "clusterconf/partition.hpp"

namespace clusterconf {

// Assembly of the stable homology of vertical cluster configuration spaces:
// clusters of k points in R^{p+1} x R^{d-p-1} confined to vertical affine
// subspaces. The building blocks are the twisted modules of the cell engine,
// with colours drawn from the k-uniform entanglement types, the parity of a
// type governing the sign twist, and an extra degree shift of p per
// "missing" cluster of a type.

// Order types by (weight, partition); this is the canonical order used for
// deterministic enumeration and output assembly.
struct TypeOrder {
  bool operator()(const EntanglementType& a, const EntanglementType& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.partition() < b.partition();
  }
};

// A formal multiset of entanglement types with positive multiplicities.
using TypeMultiset = std::map<EntanglementType, int, TypeOrder>;

// Parity of a type: p*(weight - 1) mod 2. The single-cluster type is even for
// every p; a two-cluster type is odd exactly when p is.
int parity_of_type(const EntanglementType& e, int p);

// r = total number of clusters, s = r - number of types; s measures how far
// the multiset is from consisting of single-cluster types only.
std::pair<int, int> r_and_s(const TypeMultiset& alpha);

// A finitely supported tuple over the k-uniform types of weight >= 2 (the
// single-cluster type is excluded; its multiplicity is the stabilisation
// parameter). Knows its k so the empty tuple can still be bracketed.
class LambdaTuple {
 public:
  LambdaTuple() = default;
  explicit LambdaTuple(int k);

  // count >= 1; the type must be k-uniform of weight >= 2.
  void set(const EntanglementType& e, int count);

  int k() const { return k_; }
  int size() const;          // |lambda| = number of type instances
  int s() const;             // sum of count * (weight - 1)
  const TypeMultiset& entries() const { return entries_; }

  bool operator==(const LambdaTuple& other) const {
    return k_ == other.k_ && entries_ == other.entries_;
  }
  bool operator<(const LambdaTuple& other) const;

  std::string to_text() const; // "{}" or "1,3|2,4 x1; ..."

 private:
  int k_ = 0;
  TypeMultiset entries_;
};

// lambda[n]: the tuple padded with n - |lambda| copies of the single-cluster
// type. Throws invalid_input for n < |lambda|. r(lambda[n]) = s(lambda) + n.
TypeMultiset lambda_bracket(const LambdaTuple& lambda, int n);

// All tuples with p*s(lambda) <= degree_bound, in canonical order (the empty
// tuple first). Finite because s bounds both the count and the weight of the
// types involved.
std::vector<LambdaTuple> enumerate_lambda(int k, int p, int degree_bound,
                                          int bound = kDefaultEnumBound);

// Colour data fed to the cell engine: one colour per distinct type, named by
// the type's partition text, with parity_of_type(e, p) bits.
ColourMultiset colours_of(const TypeMultiset& alpha);
ParityMap parity_of(const TypeMultiset& alpha, int p);

// Stable values of M_*(R^{p+1}; lambda[n]) as n grows. A degree is reported
// only when it is certified: degree <= (n - |lambda|)/2 at the n it was read
// from, AND the value at n+1 agrees. Disagreement inside the certified range
// is a consistency_error, never smoothed over.
struct StableModule {
  GradedAbelianGroup values;
  int certified_max = -1;        // degrees above this are not reported
  std::map<int, int> stable_at;  // degree -> n the value was read from
};

StableModule stabilize_M(const LambdaTuple& lambda, int p, int degree_bound,
                         int point_bound = kDefaultPointBound);

struct StableContribution {
  LambdaTuple lambda;
  int shift = 0; // p * s(lambda)
  StableModule module;
};

// Total stable homology up to certified_max_degree, with per-lambda
// provenance. certified_max_degree < degree_bound means some contribution ran
// into the point bound; the reported degrees are still exact.
struct StableAssembly {
  GradedAbelianGroup total;
  int certified_max_degree = -1;
  std::vector<StableContribution> contributions;

  bool complete(int degree_bound) const { return certified_max_degree >= degree_bound; }
};

// threads = 0 means the environment default; the λ-jobs run concurrently but
// assembly order (and so the result) never depends on the thread count.
StableAssembly stable_homology(int k, int p, int degree_bound,
                               int point_bound = kDefaultPointBound, int threads = 0);

// One multiset summand of the finite-level predictions.
struct GradedContribution {
  TypeMultiset alpha;
  int shift = 0;
  GradedAbelianGroup groups; // already shifted
};

// The associated-graded value at (r, s): sum over multisets with those
// invariants of the twisted module, shifted by p*s. Exact (no stabilisation);
// degree_bound only truncates the output.
struct GradedAssembly {
  GradedAbelianGroup total;
  std::vector<GradedContribution> contributions;
  bool conjectural = false;
};

GradedAssembly associated_graded(int r, int s, int k, int p, int degree_bound,
                                 int point_bound = kDefaultPointBound);

// The conjectural unstable answer at cluster count r: the associated-graded
// summed over all s. Always flagged conjectural -- whether the underlying
// spectral sequence collapses at finite r is an open question, and this
// artifact never asserts it.
GradedAssembly predicted_unstable(int r, int k, int p, int degree_bound,
                                  int point_bound = kDefaultPointBound);

} // namespace clusterconf
