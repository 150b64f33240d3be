#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

#include "clusterconf/errors.hpp"
#include "clusterconf/geometry.hpp"
#include "clusterconf/partition.hpp"

using namespace clusterconf;

namespace {

Cluster line_cluster(const std::vector<int>& xs, std::string label) {
  Cluster c;
  for (int x : xs) c.points.push_back({Rational(x)});
  c.label = std::move(label);
  return c;
}

ClusterConfiguration line_config(std::vector<Cluster> clusters) {
  return ClusterConfiguration(1, 0, std::move(clusters));
}

Cluster plane_point(int x, int y, std::string label) {
  Cluster c;
  c.points = {{Rational(x), Rational(y)}};
  c.label = std::move(label);
  return c;
}

} // namespace

TEST_CASE("configurations canonicalise and reject collisions") {
  const ClusterConfiguration a =
      line_config({line_cluster({5, 1}, "x"), line_cluster({3}, "y")});
  const ClusterConfiguration b =
      line_config({line_cluster({3}, "y"), line_cluster({1, 5}, "x")});
  CHECK(a == b);
  CHECK(a.particle_count() == 3);
  CHECK(a.clusters()[0].label == "x"); // cluster with the smallest point first

  CHECK_THROWS_AS(line_config({line_cluster({1, 1}, "x")}), invalid_input);
  CHECK_THROWS_AS(line_config({line_cluster({2}, "x"), line_cluster({2}, "y")}),
                  invalid_input);
  CHECK_THROWS_AS(ClusterConfiguration(0, 0, {}), invalid_input);
  CHECK_THROWS_AS(ClusterConfiguration(1, 2, {}), invalid_input);
  CHECK_THROWS_AS(line_config({plane_point(0, 0, "x")}), invalid_input);
}

TEST_CASE("vertical clusters share their first p coordinates") {
  Cluster ok;
  ok.points = {{Rational(1), Rational(0)}, {Rational(1), Rational(2)}};
  ok.label = "x";
  CHECK(ClusterConfiguration(2, 1, {ok}).particle_count() == 2);

  Cluster skew;
  skew.points = {{Rational(1), Rational(0)}, {Rational(2), Rational(0)}};
  skew.label = "x";
  CHECK_THROWS_AS(ClusterConfiguration(2, 1, {skew}), invalid_input);
  CHECK(ClusterConfiguration(2, 0, {skew}).particle_count() == 2);
}

TEST_CASE("chi reads off the entanglement partition") {
  CHECK(chi(ClusterConfiguration(1, 0, {})) == Partition());
  const ClusterConfiguration c =
      line_config({line_cluster({1, 5}, "x"), line_cluster({3}, "y")});
  CHECK(to_text(chi(c)) == "1,3|2");

  const ClusterConfiguration planar(2, 0, {plane_point(0, 0, "x")});
  CHECK_THROWS_AS(chi(planar), invalid_input);
  CHECK_THROWS_AS(chi(line_config({line_cluster({1}, kBasepointLabel)})),
                  invalid_input);
}

TEST_CASE("chi turns Moore concatenation into stacking") {
  const MooreElement a(Rational(4), line_config({line_cluster({1, 3}, "x"),
                                                 line_cluster({2}, "y")}));
  const MooreElement b(Rational(2), line_config({line_cluster({1}, "z")}));
  const MooreElement ab = moore_concat(a, b);
  CHECK(ab.t == Rational(6));
  CHECK(chi(ab.c) == stack(chi(a.c), chi(b.c)));
  CHECK(to_text(chi(ab.c)) == "1,3|2|4");
}

TEST_CASE("Moore widths bound the support strictly") {
  CHECK_THROWS_AS(MooreElement(Rational(1), line_config({line_cluster({2}, "x")})),
                  invalid_input);
  CHECK_THROWS_AS(MooreElement(Rational(1), line_config({line_cluster({1}, "x")})),
                  invalid_input);
  CHECK_THROWS_AS(MooreElement(Rational(-1), ClusterConfiguration(1, 0, {})),
                  invalid_input);
  CHECK_NOTHROW(MooreElement(Rational(0), ClusterConfiguration(1, 0, {})));
  CHECK_NOTHROW(MooreElement(Rational(3), line_config({line_cluster({2}, "x")})));
}

TEST_CASE("restriction keeps whole clusters or refuses") {
  const ClusterConfiguration c =
      line_config({line_cluster({1, 3}, "x"), line_cluster({5}, "y")});

  const Interval inside{Rational(0), Rational(4)};
  CHECK(restrict_to(c, inside) == line_config({line_cluster({1, 3}, "x")}));

  const Interval touching{Rational(1), Rational(4)};
  CHECK_THROWS_AS(restrict_to(c, touching), invalid_input);

  const Interval splitting{Rational(2), Rational(6)};
  CHECK_THROWS_AS(restrict_to(c, splitting), invalid_input);

  const Interval everything{std::nullopt, std::nullopt};
  CHECK(restrict_to(c, everything) == c);
  const Interval ray{Rational(4), std::nullopt};
  CHECK(restrict_to(c, ray) == line_config({line_cluster({5}, "y")}));
}

TEST_CASE("projection and partial sums detect collisions") {
  const ClusterConfiguration overlapping(
      2, 0, {plane_point(0, 1, "x"), plane_point(1, 1, "y")});
  CHECK_FALSE(is_projectable(overlapping));
  const ClusterConfiguration clear(
      2, 0, {plane_point(0, 1, "x"), plane_point(1, 2, "y")});
  CHECK(is_projectable(clear));
  CHECK_THROWS_AS(is_projectable(line_config({line_cluster({1}, "x")})),
                  invalid_input);

  const ClusterConfiguration left = line_config({line_cluster({1}, "x")});
  const ClusterConfiguration right = line_config({line_cluster({2}, "y")});
  const std::optional<ClusterConfiguration> sum = partial_sum(left, right);
  REQUIRE(sum.has_value());
  CHECK(sum->particle_count() == 2);
  CHECK_FALSE(partial_sum(left, left).has_value());
}
