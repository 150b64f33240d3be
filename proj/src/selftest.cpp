#include "clusterconf/selftest.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterconf/bar_complex.hpp"
#include "clusterconf/errors.hpp"
#include "clusterconf/fox_neuwirth.hpp"
#include "clusterconf/geometry.hpp"
#include "clusterconf/graded.hpp"
#include "clusterconf/parallel.hpp"
#include "clusterconf/partition.hpp"
#include "clusterconf/smith.hpp"
#include "clusterconf/stable.hpp"

namespace clusterconf {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

// mt19937 has a pinned-down sequence, and plain modulo keeps the draws
// platform-independent (std::uniform_int_distribution is not).
int draw(std::mt19937& rng, int n) { return static_cast<int>(rng() % n); }

Partition random_partition(std::mt19937& rng, int n) {
  // Random restricted-growth string.
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) {
    const int b = draw(rng, static_cast<int>(blocks.size()) + 1);
    if (b == static_cast<int>(blocks.size())) blocks.emplace_back();
    blocks[b].push_back(x);
  }
  return Partition(n, std::move(blocks));
}

void check_partition_roundtrip(unsigned seed) {
  std::mt19937 rng(seed);
  for (int trial = 0; trial < 300; ++trial) {
    const Partition p = random_partition(rng, 1 + draw(rng, 9));
    const std::vector<Partition> factors = factorize(p);
    Partition product;
    int max_weight = 0;
    for (const Partition& f : factors) {
      require(is_indecomposable(f), "factor fails the straddle criterion");
      product = stack(product, f);
      max_weight = std::max(max_weight, f.weight());
    }
    require(product == p, "stacking the factors does not restore " + to_text(p));
    require(filtration_level(p) == max_weight, "filtration level mismatch");
  }
}

void check_type_counts() {
  const std::vector<Int> general = count_types_by_inversion(7);
  for (int n = 1; n <= 7; ++n) {
    require(Int(enumerate_types(n).size()) == general[n],
            "type count vs series inversion differs at size " + std::to_string(n));
  }
  const std::vector<Int> uniform = count_types_by_inversion(3, 2);
  for (int w = 1; w <= 3; ++w) {
    require(Int(enumerate_types_uniform(2, w).size()) == uniform[w],
            "pair-uniform count differs at weight " + std::to_string(w));
  }
  const std::vector<Int> bell = bell_numbers(10);
  require(bell[5] == 52 && bell[10] == 115975, "Bell numbers off");
}

MooreElement random_moore(std::mt19937& rng) {
  std::vector<int> pool(20);
  for (int i = 0; i < 20; ++i) pool[i] = i + 1;
  for (int i = 19; i > 0; --i) std::swap(pool[i], pool[draw(rng, i + 1)]);

  const int clusters = 1 + draw(rng, 4);
  std::vector<Cluster> cs;
  int used = 0;
  for (int c = 0; c < clusters; ++c) {
    Cluster cluster;
    cluster.label = "x" + std::to_string(c);
    const int size = 1 + draw(rng, 3);
    for (int i = 0; i < size; ++i) cluster.points.push_back({Rational(pool[used++])});
    cs.push_back(std::move(cluster));
  }
  return MooreElement(Rational(21), ClusterConfiguration(1, 0, std::move(cs)));
}

void check_chi_homomorphism(unsigned seed) {
  std::mt19937 rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const MooreElement a = random_moore(rng);
    const MooreElement b = random_moore(rng);
    require(chi(moore_concat(a, b).c) == stack(chi(a.c), chi(b.c)),
            "chi fails to split a concatenation");
  }
}

void check_geometry_restrict() {
  const ClusterConfiguration c(
      1, 0,
      {Cluster{{{Rational(1)}, {Rational(2)}}, "a"}, Cluster{{{Rational(5)}}, "b"}});
  const ClusterConfiguration inside = restrict_to(c, {Rational(0), Rational(3)});
  require(inside.clusters().size() == 1 && inside.clusters()[0].label == "a",
          "restriction kept the wrong clusters");
  bool threw = false;
  try {
    restrict_to(c, {Rational(0), Rational(2)}); // support touches the boundary
  } catch (const invalid_input&) {
    threw = true;
  }
  require(threw, "boundary touch not rejected");

  const ClusterConfiguration straddler(
      1, 0, {Cluster{{{Rational(2)}, {Rational(5)}}, "a"}});
  threw = false;
  try {
    restrict_to(straddler, {Rational(0), Rational(3)});
  } catch (const invalid_input&) {
    threw = true;
  }
  require(threw, "straddling cluster not rejected");
}

void check_bar_homology() {
  DiscreteLabels labels;
  labels.counts = {{1, 2}, {2, 1}};
  for (int n = 1; n <= 4; ++n) {
    const GradedAbelianGroup h = build_bar_complex(labels, n).homology();
    for (const auto& [degree, group] : h.groups) {
      require(degree <= 1, "bar homology above degree 1");
      require(group.torsion.empty(), "bar homology has torsion");
    }
    require(Int(h.at(1).betti) == free_generator_count(labels, n),
            "degree-1 bar homology differs from the generator count at size " +
                std::to_string(n));
  }
}

void check_formulas() {
  LabelSystem labels;
  labels.set_discrete(2, 1); // two-point clusters, one non-basepoint label
  const FormulaResult iter = iterated_formula(labels, 1, 4);
  require(iter.certified, "iterated formula lost its certificate");
  require(iter.total.rank_at(2) == 1 && iter.total.rank_at(3) == 2 &&
              iter.total.rank_at(4) == 10,
          "iterated formula ranks off");

  // One delooping of the shifted labels is the same computation.
  const FormulaResult via_segal = bar_formula(segal_formula(labels, 1), 4);
  require(via_segal.certified && via_segal.total == iter.total,
          "shift-then-bar disagrees with the iterated formula");

  // Discrete labels with sizes >= 2 admit contributing types of every
  // weight, so a bare call must refuse rather than truncate silently.
  bool threw = false;
  try {
    bar_formula(labels, 4);
  } catch (const infeasible&) {
    threw = true;
  }
  require(threw, "uncertifiable formula did not refuse");
}

void check_fn_known_answers() {
  const ColourMultiset two_ordered({{"a", 1}, {"b", 1}});
  const GradedAbelianGroup ordered =
      twisted_homology(two_ordered, 2, ParityMap::trivial(two_ordered));
  require(ordered.at(0) == AbelianGroup{1, {}} && ordered.at(1) == AbelianGroup{1, {}},
          "two ordered points in the plane are not a circle");

  const ColourMultiset pair({{"a", 2}});
  const GradedAbelianGroup plane = twisted_homology(pair, 2, ParityMap::trivial(pair));
  require(plane.at(0) == AbelianGroup{1, {}} && plane.at(1) == AbelianGroup{1, {}},
          "two unordered points in the plane are not a circle");

  ParityMap odd;
  odd.bits["a"] = 1;
  const GradedAbelianGroup twisted = twisted_homology(pair, 2, odd);
  require(twisted.at(0) == AbelianGroup{0, {2}} && twisted.at(1).is_zero(),
          "odd parity pair in the plane is not Z/2, 0");

  const GradedAbelianGroup space = twisted_homology(pair, 3, ParityMap::trivial(pair));
  require(space.at(0) == AbelianGroup{1, {}} && space.at(1) == AbelianGroup{0, {2}} &&
              space.at(2).is_zero(),
          "two points in 3-space are not a projective plane");

  for (int n = 2; n <= 3; ++n) {
    const ColourMultiset alpha({{"a", n}});
    require(twisted_homology(alpha, 2, ParityMap::trivial(alpha)).at(1) ==
                AbelianGroup{1, {}},
            "first homology of " + std::to_string(n) + " points in the plane");
  }
}

void check_fn_euler() {
  const std::vector<std::map<std::string, int>> alphas = {
      {{"a", 3}}, {{"a", 2}, {"b", 1}}, {{"a", 1}, {"b", 1}, {"c", 1}}, {{"a", 4}}};
  for (const auto& counts : alphas) {
    const ColourMultiset alpha(counts);
    for (int d = 1; d <= 3; ++d) {
      for (int twist = 0; twist < 2; ++twist) {
        ParityMap parity = ParityMap::trivial(alpha);
        if (twist) {
          for (auto& [name, bit] : parity.bits) bit = 1;
        }
        const ChainComplex complex = fn_complex(alpha, d, parity); // checks d^2 = 0
        Int cells = 0;
        std::int64_t betti = 0;
        for (int q = 0; q <= complex.top_degree(); ++q) {
          cells += (q % 2 ? -1 : 1) * Int(complex.rank(q));
        }
        const GradedAbelianGroup h = complex.homology();
        for (const auto& [degree, group] : h.groups) {
          betti += (degree % 2 ? -1 : 1) * group.betti;
        }
        require(cells == betti, "Euler characteristic mismatch");
      }
    }
  }
}

void check_fn_refinement() {
  // Forgetting a colour refinement can only lose homology, degreewise.
  const ColourMultiset coarse({{"a", 3}});
  const ColourMultiset fine({{"a", 2}, {"b", 1}});
  const ColourMultiset finest({{"a", 1}, {"b", 1}, {"c", 1}});
  const GradedAbelianGroup h_coarse =
      twisted_homology(coarse, 2, ParityMap::trivial(coarse));
  const GradedAbelianGroup h_fine = twisted_homology(fine, 2, ParityMap::trivial(fine));
  const GradedAbelianGroup h_finest =
      twisted_homology(finest, 2, ParityMap::trivial(finest));
  for (int q = 0; q <= 2; ++q) {
    require(h_coarse.at(q).betti <= h_fine.at(q).betti &&
                h_fine.at(q).betti <= h_finest.at(q).betti,
            "refinement transfer inequality fails in degree " + std::to_string(q));
  }
}

void check_stable_assembly() {
  const StableAssembly pairs = stable_homology(2, 1, 1);
  require(pairs.complete(1), "stable assembly lost its certificate");
  require(pairs.total.at(0) == AbelianGroup{1, {}}, "stable degree 0 is not Z");
  require(pairs.total.at(1) == AbelianGroup{3, {}}, "stable degree 1 is not Z^3");

  // Single-point clusters: the assembly must reproduce the plain stable
  // homology of unordered configurations, computed directly.
  const StableAssembly plain = stable_homology(1, 2, 1);
  require(plain.total.at(0) == AbelianGroup{1, {}} &&
              plain.total.at(1) == AbelianGroup{0, {2}},
          "stable homology of plain configurations in 3-space");
  const ColourMultiset direct({{"a", 3}});
  require(plain.total.at(1) ==
              twisted_homology(direct, 3, ParityMap::trivial(direct)).at(1),
          "assembled and direct stable values differ");
}

void check_predictions() {
  const GradedAssembly predicted = predicted_unstable(2, 2, 1, 2);
  require(predicted.conjectural, "prediction lost its conjecture flag");
  require(predicted.total.at(0) == AbelianGroup{1, {}} &&
              predicted.total.at(1) == AbelianGroup{3, {}},
          "predicted values at two clusters");

  Int euler_pieces = 0;
  for (int s = 0; s <= 1; ++s) {
    for (const auto& [degree, group] :
         associated_graded(2, s, 2, 1, 6).total.groups) {
      euler_pieces += (degree % 2 ? -1 : 1) * Int(group.betti);
    }
  }
  Int euler_total = 0;
  for (const auto& [degree, group] : predicted_unstable(2, 2, 1, 6).total.groups) {
    euler_total += (degree % 2 ? -1 : 1) * Int(group.betti);
  }
  require(euler_pieces == euler_total, "associated-graded Euler bookkeeping");
}

void check_smith() {
  SparseIntMatrix m(2, 2);
  m.set(0, 0, Int(2));
  m.set(0, 1, Int(4));
  m.set(1, 0, Int(6));
  m.set(1, 1, Int(8));
  const SmithResult snf = smith_normal_form(m);
  require(snf.divisors == std::vector<Int>{Int(2), Int(4)}, "SNF of a 2x2 example");

  SparseIntMatrix zero(3, 2);
  require(smith_normal_form(zero).rank() == 0, "SNF of zero matrix");
}

} // namespace

int run_selftest(std::ostream& out, int threads, unsigned seed) {
  const std::vector<std::pair<std::string, std::function<void()>>> checks = {
      {"partition-roundtrip", [seed] { check_partition_roundtrip(seed); }},
      {"type-counts", check_type_counts},
      {"chi-homomorphism", [seed] { check_chi_homomorphism(seed ^ 0x9e3779b9u); }},
      {"geometry-restrict", check_geometry_restrict},
      {"bar-homology", check_bar_homology},
      {"graded-formulas", check_formulas},
      {"fn-known-answers", check_fn_known_answers},
      {"fn-euler", check_fn_euler},
      {"fn-refinement", check_fn_refinement},
      {"stable-assembly", check_stable_assembly},
      {"predictions", check_predictions},
      {"smith-examples", check_smith},
  };

  std::vector<std::string> lines(checks.size());
  parallel_for(checks.size(), threads, [&](std::size_t i) {
    try {
      checks[i].second();
      lines[i] = "ok " + checks[i].first;
    } catch (const std::exception& e) {
      lines[i] = "FAIL " + checks[i].first + ": " + e.what();
    }
  });

  int failures = 0;
  for (const std::string& line : lines) {
    out << line << "\n";
    if (line.rfind("ok ", 0) != 0) ++failures;
  }
  out << "selftest: " << checks.size() << " checks, " << failures << " failures\n";
  return failures;
}

} // namespace clusterconf
