#include "clusterconf/geometry.hpp"

#include <algorithm>
#include <set>

#include "clusterconf/errors.hpp"

namespace clusterconf {

ClusterConfiguration::ClusterConfiguration(int d, int p, std::vector<Cluster> clusters)
    : d_(d), p_(p), clusters_(std::move(clusters)) {
  if (d_ < 1) throw invalid_input("ambient dimension must be >= 1");
  if (p_ < 0 || p_ > d_) throw invalid_input("verticality parameter must satisfy 0 <= p <= d");
  std::set<std::vector<Rational>> seen;
  for (auto& cluster : clusters_) {
    if (cluster.points.empty()) throw invalid_input("empty cluster");
    for (const auto& pt : cluster.points) {
      if (static_cast<int>(pt.size()) != d_)
        throw invalid_input("point dimension != d");
      if (!seen.insert(pt).second)
        throw invalid_input("particles collide");
    }
    for (const auto& pt : cluster.points)
      for (int j = 0; j < p_; ++j)
        if (pt[static_cast<std::size_t>(j)] != cluster.points.front()[static_cast<std::size_t>(j)])
          throw invalid_input("cluster is not vertical: first " + std::to_string(p_) +
                              " coordinates differ within a cluster");
    std::sort(cluster.points.begin(), cluster.points.end());
  }
  std::sort(clusters_.begin(), clusters_.end(), [](const Cluster& a, const Cluster& b) {
    if (a.points != b.points) return a.points < b.points;
    return a.label < b.label;
  });
}

int ClusterConfiguration::particle_count() const {
  int n = 0;
  for (const auto& cluster : clusters_) n += static_cast<int>(cluster.points.size());
  return n;
}

Partition chi(const ClusterConfiguration& c) {
  if (c.d() != 1) throw invalid_input("chi needs a d = 1 configuration");
  std::vector<std::pair<Rational, int>> particles; // (coordinate, cluster index)
  for (int i = 0; i < static_cast<int>(c.clusters().size()); ++i) {
    const auto& cluster = c.clusters()[static_cast<std::size_t>(i)];
    if (cluster.label == kBasepointLabel)
      throw invalid_input("chi: basepoint-labelled cluster");
    for (const auto& pt : cluster.points) particles.emplace_back(pt[0], i);
  }
  std::sort(particles.begin(), particles.end());
  std::vector<std::vector<int>> blocks(c.clusters().size());
  for (int rank = 0; rank < static_cast<int>(particles.size()); ++rank)
    blocks[static_cast<std::size_t>(particles[static_cast<std::size_t>(rank)].second)]
        .push_back(rank + 1);
  return Partition(static_cast<int>(particles.size()), std::move(blocks));
}

std::vector<Rational> support(const ClusterConfiguration& c) {
  std::set<Rational> values;
  for (const auto& cluster : c.clusters())
    for (const auto& pt : cluster.points) values.insert(pt[0]);
  return std::vector<Rational>(values.begin(), values.end());
}

bool Interval::contains(const Rational& x) const {
  if (lo && x < *lo) return false;
  if (hi && x > *hi) return false;
  return true;
}

bool Interval::on_boundary(const Rational& x) const {
  return (lo && x == *lo) || (hi && x == *hi);
}

ClusterConfiguration restrict_to(const ClusterConfiguration& c, const Interval& L) {
  for (const Rational& x : support(c))
    if (L.on_boundary(x))
      throw invalid_input("restrict: support touches the interval boundary");
  std::vector<Cluster> kept;
  for (const auto& cluster : c.clusters()) {
    int inside = 0;
    for (const auto& pt : cluster.points)
      if (L.contains(pt[0])) ++inside;
    if (inside == 0) continue;
    if (inside != static_cast<int>(cluster.points.size()))
      throw invalid_input("restrict: a cluster straddles the interval");
    kept.push_back(cluster);
  }
  return ClusterConfiguration(c.d(), c.p(), std::move(kept));
}

MooreElement::MooreElement(Rational width, ClusterConfiguration config)
    : t(std::move(width)), c(std::move(config)) {
  if (t < 0) throw invalid_input("Moore element width must be >= 0");
  for (const Rational& x : support(c))
    if (!(x > 0 && x < t))
      throw invalid_input("Moore element support must lie strictly inside (0; t)");
}

MooreElement moore_concat(const MooreElement& a, const MooreElement& b) {
  std::vector<Cluster> clusters = a.c.clusters();
  for (Cluster cluster : b.c.clusters()) {
    for (auto& pt : cluster.points) pt[0] += a.t;
    clusters.push_back(std::move(cluster));
  }
  return MooreElement(a.t + b.t,
                      ClusterConfiguration(a.c.d(), a.c.p(), std::move(clusters)));
}

bool is_projectable(const ClusterConfiguration& c) {
  if (c.d() < 2) throw invalid_input("is_projectable needs d >= 2");
  std::set<std::vector<Rational>> projected;
  for (const auto& cluster : c.clusters())
    for (const auto& pt : cluster.points)
      if (!projected.emplace(pt.begin() + 1, pt.end()).second) return false;
  return true;
}

std::optional<ClusterConfiguration> partial_sum(const ClusterConfiguration& a,
                                                const ClusterConfiguration& b) {
  if (a.d() != b.d() || a.p() != b.p())
    throw invalid_input("partial_sum: mismatched d or p");
  std::set<std::vector<Rational>> seen;
  for (const auto& cluster : a.clusters())
    for (const auto& pt : cluster.points) seen.insert(pt);
  for (const auto& cluster : b.clusters())
    for (const auto& pt : cluster.points)
      if (!seen.insert(pt).second) return std::nullopt;
  std::vector<Cluster> clusters = a.clusters();
  clusters.insert(clusters.end(), b.clusters().begin(), b.clusters().end());
  return ClusterConfiguration(a.d(), a.p(), std::move(clusters));
}

} // namespace clusterconf
