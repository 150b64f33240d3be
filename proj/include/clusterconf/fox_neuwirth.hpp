#pragma once

#include <map>
#include <string>
#include <vector>

#include "clusterconf/chain_complex.hpp"

namespace clusterconf {

// Cellular engine for coloured configuration spaces of R^d.
//
// The space: configurations of n = |alpha| points in R^d, where points of the
// same colour are indistinguishable. Sorting a configuration
// lexicographically by coordinates cuts the space into strata: a stratum is
// coded by the sequence of colours in sorted order together with, for each
// consecutive pair, the first coordinate axis where the two points differ
// (the "separator depth" a_i, 1-based). Points i and i+1 share coordinates
// 1..a_i-1 and increase strictly at coordinate a_i, so the stratum is an open
// cell of dimension n*d - sum(a_i - 1). These cells assemble the one-point
// compactification, whose reduced cohomology is the compactly supported
// cohomology of the open space. Reindexing by q = codimension = sum(a_i - 1)
// turns the cellular coboundary into a chain differential on degrees
// 0..(d-1)(n-1), and (twisted) Poincare duality identifies the homology of
// that complex with the twisted homology M_*(R^d; alpha) of the coloured
// space, with local coefficients built from the parity assignment.
//
// Differential. A degree-q cell S degenerates out of degree-(q-1) cells: one
// separator drops from t to t-1. Concretely, fix a level t in 2..d and a
// maximal run B of positions whose internal separators are all >= t (a block
// of points sharing coordinates 1..t-1). Cutting B at the separators equal
// to t gives sub-blocks b_1..b_m. For every proper nonempty subset A of
// {1..m}, the cell S' with B replaced by (b_i : i in A), then separator t-1,
// then the remaining sub-blocks in order -- separators within each group
// equal to t -- contains S in its closure with multiplicity one: the chosen
// group sat just below the rest at coordinate t-1 and merged with it,
// interleaving sub-blocks by their coordinate-t values. The colour word of S'
// is the corresponding shuffle of the word of S. The boundary of S is the
// signed sum of all such S' over (t, B, A).
//
// Signs. Each stratum is oriented by an explicit ordered basis: for each
// coordinate axis c, the positions sharing coordinate c form runs
// ("c-groups", runs with separators >= c+1), and moving a whole run along
// axis c is one tangent vector, the sum of the e_{P,c} over members P. Every
// position P leads exactly the groups (P, c) for c from start_P to d, where
// start_1 = 1 and start_P = a_{P-1}; the orientation is the wedge of the
// group vectors in lexicographic (P, c) order. For a boundary term, the
// normal direction is nu = sum of e_{P,t-1} over the non-chosen group B'':
// travelling along +nu reopens the collapsed gap. Expressing the basis of S'
// in terms of nu followed by the basis of S (the chosen group's vector
// equals v_B - nu and column-reduces to v_B; the non-chosen group's vector
// is nu; every other group survives verbatim) leaves a permutation matrix,
// and the incidence sign is its parity. test_fox_neuwirth.cpp checks this
// parity against the sign of the actual change-of-basis determinant over Q
// on random cells, so the combinatorial shortcut is never trusted blind.
//
// Twist. Cells of the coloured space are colour words themselves; a boundary
// term whose shuffle realigns same-coloured letters picks up the character
// of that relabelling permutation pi: sign(sigma_i) for every colour i of
// parity 1 (sigma_i = permutation induced on the colour-i letters) times
// sign(pi)^d (the effect of pi on the ambient orientation of R^{nd}, i.e.
// the orientation system of the quotient that twisted duality inserts).
//
// Known answers pin the whole convention down: two points in R^2 give a
// circle (trivial parity) and Z/2, 0 (odd parity); two points in R^3 give
// the homology of the real projective plane.

// Colour names with positive multiplicities, kept sorted by name. The letter
// indices used by FNWord refer to positions in names().
class ColourMultiset {
 public:
  explicit ColourMultiset(const std::map<std::string, int>& counts);

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& counts() const { return counts_; }
  int total() const { return total_; }
  int colour_count() const { return static_cast<int>(names_.size()); }

  // The sorted letter word, e.g. (0,0,1) for counts {e0:2, e1:1}.
  std::vector<int> sorted_letters() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> counts_;
  int total_ = 0;
};

// Parity bit per colour name; must cover every colour of the multiset it is
// used with.
struct ParityMap {
  std::map<std::string, int> bits;

  static ParityMap trivial(const ColourMultiset& alpha);
  // Bits by letter index, validating coverage. Throws invalid_input on a
  // missing colour or a bit outside {0,1}.
  std::vector<int> bits_for(const ColourMultiset& alpha) const;
};

// One stratum: colour letters (indices into a ColourMultiset) and the n-1
// separator depths in 1..d.
struct FNWord {
  std::vector<int> letters;
  std::vector<int> seps;

  int points() const { return static_cast<int>(letters.size()); }
  int degree() const;              // codimension, sum of (sep - 1)
  int dimension(int d) const;      // points * d - degree
  std::string to_text(const ColourMultiset& alpha) const; // "e0,e1|2,1"

  bool operator==(const FNWord&) const = default;
  bool operator<(const FNWord& other) const;
};

// One boundary term of `fn_boundary_terms`, with enough of the split data to
// rebuild the tangent bases independently in tests.
struct SplitTerm {
  FNWord target;                 // the degree-(q-1) cell S'
  std::vector<int> tau_to_sigma; // position map: S' position -> S position
  int level = 0;                 // t: the separator that dropped to t-1
  int region_start = 0;          // first position of the merged block B
  int region_size = 0;           // number of positions in B
  int chosen_size = 0;           // positions in the chosen group B'
  int geo_sign = 0;              // orientation-comparison parity, +-1
  int twist_sign = 0;            // parity/orientation character of the shuffle, +-1
};

// Default feasibility bound: cell counts grow as multinomial * d^(n-1), and
// eight points in the plane (~10^5 cells) is where reduction stops being
// quick.
inline constexpr int kDefaultPointBound = 8;
inline constexpr int kMaxAmbientDimension = 4;

// All strata, indexed by homological degree 0..(d-1)(n-1). Total count is
// multinomial(n; alpha) * d^(n-1). Throws infeasible over the bounds.
std::vector<std::vector<FNWord>> fn_cells(const ColourMultiset& alpha, int d,
                                          int bound = kDefaultPointBound);

// All boundary terms of one cell; parity_bits indexed by letter.
std::vector<SplitTerm> fn_boundary_terms(const FNWord& cell, int d,
                                         const std::vector<int>& parity_bits);

// The full twisted cellular complex; homology(fn_complex(...)) is
// M_*(R^d; alpha). The d-squared-zero check runs at construction.
ChainComplex fn_complex(const ColourMultiset& alpha, int d, const ParityMap& parity,
                        int bound = kDefaultPointBound);

GradedAbelianGroup twisted_homology(const ColourMultiset& alpha, int d,
                                    const ParityMap& parity,
                                    int bound = kDefaultPointBound);

} // namespace clusterconf
