#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clusterconf/numbers.hpp"
#include "clusterconf/partition.hpp"

namespace clusterconf {

// Label attached to a cluster; "*" is reserved for the basepoint.
inline constexpr const char* kBasepointLabel = "*";

struct Cluster {
  std::vector<std::vector<Rational>> points; // each of length d
  std::string label;

  bool operator==(const Cluster&) const = default;
};

// A configuration of labelled clusters of pairwise distinct points in R^d.
// With verticality p >= 1, the points of each cluster share their first p
// coordinates (they sit in one fibre of R^d -> R^p). Stored canonically:
// points sorted lexicographically within each cluster, clusters sorted by
// their smallest point, so structural equality is configuration equality.
class ClusterConfiguration {
 public:
  ClusterConfiguration() : d_(1), p_(0) {}
  ClusterConfiguration(int d, int p, std::vector<Cluster> clusters);

  int d() const { return d_; }
  int p() const { return p_; }
  const std::vector<Cluster>& clusters() const { return clusters_; }
  bool empty() const { return clusters_.empty(); }
  int particle_count() const;

  bool operator==(const ClusterConfiguration&) const = default;

 private:
  int d_;
  int p_;
  std::vector<Cluster> clusters_;
};

// Monotone relabelling of a d = 1 configuration: sort all particle
// coordinates, rename them 1..N, one block per cluster. Requires every label
// to be non-basepoint.
Partition chi(const ClusterConfiguration& c);

// Sorted distinct first coordinates of all particles.
std::vector<Rational> support(const ClusterConfiguration& c);

// A closed interval with optionally infinite ends.
struct Interval {
  std::optional<Rational> lo; // nullopt = -infinity
  std::optional<Rational> hi; // nullopt = +infinity

  bool contains(const Rational& x) const;
  bool on_boundary(const Rational& x) const;
};

// Keep exactly the clusters whose first coordinates lie in L. Errors if the
// support touches the boundary of L, or if a (non-vertical) cluster has first
// coordinates both inside and outside L — such a cluster can neither be kept
// nor dropped whole.
ClusterConfiguration restrict_to(const ClusterConfiguration& c, const Interval& L);

// An element of the Moore-style monoid: a width together with a configuration
// supported strictly inside (0; t).
struct MooreElement {
  Rational t;
  ClusterConfiguration c;

  MooreElement(Rational width, ClusterConfiguration config);
};

// (t,c)·(t',c') = (t+t', c united with c' shifted by t in the first
// coordinate). Disjointness is automatic from the support bounds.
MooreElement moore_concat(const MooreElement& a, const MooreElement& b);

// True iff dropping the first coordinate stays injective on particles (d >= 2).
bool is_projectable(const ClusterConfiguration& c);

// Union when all particles stay distinct, nullopt ("not summable") otherwise.
// Requires matching d and p.
std::optional<ClusterConfiguration> partial_sum(const ClusterConfiguration& a,
                                                const ClusterConfiguration& b);

} // namespace clusterconf
