#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clusterconf/numbers.hpp"
#include "clusterconf/partition.hpp"

namespace clusterconf {

// Coefficient field for the closed formulas. Everything here is rank
// bookkeeping, so the tag travels along mostly to keep mixed-field arithmetic
// from happening by accident; integral (torsion-aware) computation lives in
// the chain-level engine instead.
struct Field {
  bool rational = true; // false = F_p
  int p = 0;            // prime when !rational

  bool operator==(const Field&) const = default;
  std::string to_text() const { return rational ? "Q" : "F" + std::to_string(p); }
};

// Reduced homology ranks of a space, graded by degree. `trunc` is the honesty
// marker: entries above it are unknown (and therefore never stored); nullopt
// means the data is complete in all degrees.
struct GradedModule {
  Field field;
  std::map<int, Int> ranks; // degree -> rank, zero entries never stored
  std::optional<int> trunc;

  Int rank_at(int degree) const;
  bool known_zero() const { return ranks.empty() && !trunc; }
  // Lowest degree that could be nonzero: lowest stored degree, else trunc+1
  // for a truncated module with nothing stored, else nullopt (exact zero).
  std::optional<int> lowest_possible_degree() const;

  GradedModule shifted(int amount) const;
  void truncate(int new_trunc);

  bool operator==(const GradedModule&) const = default;
};

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
// Kunneth over a field: ranks convolve; truncation degrades to
// min_i (trunc_i + sum_{j != i} lowest_j).
GradedModule tensor(const GradedModule& a, const GradedModule& b);

// Label data per block size: either a finite discrete pointed set (stored as
// its count of non-basepoint elements) or the reduced homology of a labelling
// space. Sizes not present mean "just the basepoint". No symmetric-group
// action is stored: every formula implemented here consumes ranks only.
class LabelSystem {
 public:
  LabelSystem() = default;
  explicit LabelSystem(Field field) : field_(field) {}

  const Field& field() const { return field_; }
  void set_discrete(int k, int non_basepoint_count);
  void set_module(int k, GradedModule m);

  bool has(int k) const { return entries_.count(k) > 0; }
  std::vector<int> sizes() const;
  // Reduced homology of the size-k label space; zero module if absent.
  GradedModule reduced(int k) const;

  // All entries discrete? Then the exact chain-level oracle applies.
  bool all_discrete() const;

  const std::map<int, std::variant<int, GradedModule>>& entries() const {
    return entries_;
  }

 private:
  Field field_;
  std::map<int, std::variant<int, GradedModule>> entries_;
};

// Reduced homology of the smash product with block-size profile K, via the
// Kunneth rule. Errors if some size in K has no label entry.
GradedModule smash_homology(const LabelSystem& labels, const std::vector<int>& profile);

// One aggregated summand of a formula evaluation: everything contributed by
// types of the given weight and underlying size.
struct FormulaContribution {
  int weight = 0; // number of blocks of the types
  int size = 0;   // number of underlying elements
  GradedModule part;
};

struct FormulaResult {
  GradedModule total;   // truncated at the requested degree bound
  bool certified = false; // true iff no type outside the enumeration can
                           // contribute at or below the bound
  int max_weight = 0;   // types were enumerated up to this weight
  std::string note;     // reason when not certified
  std::vector<FormulaContribution> blocks; // sorted by (weight, size)
};

// Degreewise homology of the one-fold delooping: each type e contributes the
// smash homology of its profile, shifted up by 1. Certification needs every
// active label to start in degree >= 1 (or only size 1 active); otherwise the
// weight of contributing types is unbounded and the call throws infeasible
// unless weight_cap opts into an explicitly partial (per-weight complete)
// answer.
FormulaResult bar_formula(const LabelSystem& labels, int degree_bound,
                          std::optional<int> k_filter = std::nullopt,
                          std::optional<int> weight_cap = std::nullopt,
                          int bound = kDefaultEnumBound);

// Degreewise homology of the (p+1)-fold delooping of the vertical theory:
// type e contributes with shift (p+1) + p(#e - 1). Always certifiable for
// p >= 1 since the shift grows with the weight.
FormulaResult iterated_formula(const LabelSystem& labels, int p, int degree_bound,
                               std::optional<int> k_filter = std::nullopt,
                               int bound = kDefaultEnumBound);

// The label system of the equivalent lower-dimensional theory: every label
// grade shifted up by p (discrete entries become degree-p modules). p = 0 is
// the identity.
LabelSystem segal_formula(const LabelSystem& labels, int p);

} // namespace clusterconf
