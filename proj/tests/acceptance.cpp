// End-to-end acceptance checks: eight independent criteria covering every
// layer, from the partition monoid up to the stable assembly. Each criterion
// prints exactly one PASS/FAIL line and carries its own time budget; the
// exit code is the number of failures.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clusterconf/bar_complex.hpp"
#include "clusterconf/errors.hpp"
#include "clusterconf/fox_neuwirth.hpp"
#include "clusterconf/geometry.hpp"
#include "clusterconf/graded.hpp"
#include "clusterconf/partition.hpp"
#include "clusterconf/selftest.hpp"
#include "clusterconf/stable.hpp"

using namespace clusterconf;

namespace {

struct check_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw check_failure(what);
}

int draw(std::mt19937& rng, int n) { return static_cast<int>(rng() % n); }

// Uniform-ish random partition of {1..n} via a random restricted-growth string.
Partition random_partition(std::mt19937& rng, int n) {
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) {
    const int choice = draw(rng, static_cast<int>(blocks.size()) + 1);
    if (choice == static_cast<int>(blocks.size())) blocks.emplace_back();
    blocks[static_cast<std::size_t>(choice)].push_back(x);
  }
  return Partition(n, std::move(blocks));
}

// ---------------------------------------------------------------------------
// 1. Free-monoid suite: randomized factorisation roundtrips plus the two
//    independent indecomposable counts (exhaustive filter vs series inversion).

void criterion_free_monoid() {
  std::mt19937 rng(20260821u);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = draw(rng, 13); // sizes <= 12
    const Partition p = random_partition(rng, n);
    const std::vector<Partition> factors = factorize(p);
    Partition back;
    int level = 0;
    for (const Partition& f : factors) {
      expect(is_indecomposable(f), "decomposable factor from factorize");
      back = stack(back, f);
      level = std::max(level, f.weight());
    }
    expect(back == p, "stack(factorize(p)) != p");
    expect(level == filtration_level(p), "filtration level mismatch");
  }

  const std::vector<Int> inverted = count_types_by_inversion(10);
  const std::vector<Int> bells = bell_numbers(10);
  for (int n = 1; n <= 10; ++n) {
    const std::vector<Partition> all = enumerate_partitions(n);
    expect(Int(all.size()) == bells[static_cast<std::size_t>(n)],
           "Bell number mismatch at n = " + std::to_string(n));
    Int exhaustive = 0;
    for (const Partition& p : all) {
      if (is_indecomposable(p)) ++exhaustive;
    }
    expect(exhaustive == inverted[static_cast<std::size_t>(n)],
           "indecomposable count mismatch at n = " + std::to_string(n));
    expect(Int(enumerate_types(n).size()) == exhaustive,
           "enumerate_types disagrees with the direct filter at n = " +
               std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// 2. Discrete bar oracle: for every label system with sizes <= 3 and at most
//    3 non-base points per size, bar homology in weight n <= 6 is Z-free,
//    concentrated in degree <= 1, of rank = sum over size-n types of the
//    label-count product; the closed formula reproduces the same blocks
//    wherever its enumeration bound allows evaluation.

void criterion_discrete_bar() {
  for (int c1 = 0; c1 <= 3; ++c1) {
    for (int c2 = 0; c2 <= 3; ++c2) {
      for (int c3 = 0; c3 <= 3; ++c3) {
        DiscreteLabels labels;
        if (c1 > 0) labels.counts[1] = c1;
        if (c2 > 0) labels.counts[2] = c2;
        if (c3 > 0) labels.counts[3] = c3;

        for (int n = 0; n <= 6; ++n) {
          const ChainComplex bar = build_bar_complex(labels, n);
          const GradedAbelianGroup h = bar.homology();
          for (const auto& [degree, group] : h.groups) {
            expect(group.torsion.empty(), "torsion in bar homology");
            expect(degree <= 1, "bar homology above degree 1");
            if (n >= 1) expect(degree == 1, "bar homology in degree 0");
          }
          const Int generators = free_generator_count(labels, n);
          expect(Int(h.at(1).betti) == generators,
                 "H_1 of the bar complex misses the generator count (labels " +
                     labels.to_text() + ", weight " + std::to_string(n) + ")");
          if (n == 0) expect(h.at(0).betti == 1, "unit complex must have H_0 = Z");
        }

        LabelSystem sys{Field{}};
        for (const auto& [k, c] : labels.counts) sys.set_discrete(k, c);

        // Full per-size match where the enumeration stays under the bound
        // (all active sizes <= 2: a weight cap of 5 covers every type of
        // size <= 6 because indecomposables of weight w have size >= w+1).
        if (c3 == 0) {
          const FormulaResult f = bar_formula(sys, 1, std::nullopt, 5);
          std::map<int, Int> by_size;
          for (const FormulaContribution& b : f.blocks) {
            by_size[b.size] += b.part.rank_at(1);
          }
          for (int n = 1; n <= 6; ++n) {
            expect(by_size[n] == free_generator_count(labels, n),
                   "bar_formula size column mismatch (labels " + labels.to_text() +
                       ", size " + std::to_string(n) + ")");
          }
        }

        // Uniform columns for every system via the size filter.
        const FormulaResult f1 = bar_formula(sys, 1, 1);
        expect(f1.certified, "size-1 filter must certify");
        expect(f1.total.rank_at(1) == Int(c1), "size-1 column mismatch");

        const FormulaResult f2 = bar_formula(sys, 1, 2, 3);
        for (int w = 1; w <= 3; ++w) {
          Int got = 0;
          for (const FormulaContribution& b : f2.blocks) {
            if (b.weight == w && b.size == 2 * w) got += b.part.rank_at(1);
          }
          Int want = Int(enumerate_types_uniform(2, w).size());
          for (int i = 0; i < w; ++i) want *= c2;
          expect(got == want, "2-uniform column mismatch at weight " + std::to_string(w));
        }

        const FormulaResult f3 = bar_formula(sys, 1, 3, 2);
        for (int w = 1; w <= 2; ++w) {
          Int got = 0;
          for (const FormulaContribution& b : f3.blocks) {
            if (b.weight == w && b.size == 3 * w) got += b.part.rank_at(1);
          }
          Int want = Int(enumerate_types_uniform(3, w).size());
          for (int i = 0; i < w; ++i) want *= c3;
          expect(got == want, "3-uniform column mismatch at weight " + std::to_string(w));
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 3. The chi homomorphism: concatenation of one-dimensional cluster
//    configurations maps to the stacking product, and deleting a cluster
//    maps to deleting the matching block.

MooreElement random_moore(std::mt19937& rng, int label_offset) {
  const Rational width = 8;
  const int cluster_count = draw(rng, 5); // 0..4 clusters
  // Distinct quarter-integer coordinates strictly inside (0, 8).
  std::vector<int> grid(31);
  for (int i = 0; i < 31; ++i) grid[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 30; i > 0; --i) {
    std::swap(grid[static_cast<std::size_t>(i)],
              grid[static_cast<std::size_t>(draw(rng, i + 1))]);
  }
  std::size_t next = 0;
  std::vector<Cluster> clusters;
  for (int i = 0; i < cluster_count; ++i) {
    const int size = 1 + draw(rng, 3);
    Cluster cl;
    cl.label = "x" + std::to_string(label_offset + i);
    for (int j = 0; j < size; ++j) {
      cl.points.push_back({Rational(grid[next++]) / 4});
    }
    clusters.push_back(std::move(cl));
  }
  return MooreElement(width, ClusterConfiguration(1, 0, std::move(clusters)));
}

void criterion_chi() {
  std::mt19937 rng(771177u);
  for (int trial = 0; trial < 10000; ++trial) {
    const MooreElement a = random_moore(rng, 0);
    const MooreElement b = random_moore(rng, 10);
    const MooreElement ab = moore_concat(a, b);
    expect(chi(ab.c) == stack(chi(a.c), chi(b.c)), "chi is not a homomorphism");

    const std::vector<Cluster>& cl = ab.c.clusters();
    if (!cl.empty()) {
      const int i = draw(rng, static_cast<int>(cl.size()));
      std::vector<Cluster> rest;
      for (int j = 0; j < static_cast<int>(cl.size()); ++j) {
        if (j != i) rest.push_back(cl[static_cast<std::size_t>(j)]);
      }
      const ClusterConfiguration smaller(1, 0, std::move(rest));
      expect(chi(smaller) == remove_block(chi(ab.c), i),
             "chi does not commute with cluster deletion");
    }
  }
}

// ---------------------------------------------------------------------------
// 4. Cell engine known answers: d-squared = 0 on every complex with at most
//    6 points in dimension <= 3 (trivial and all-odd parities; the check
//    runs inside the chain-complex constructor), plus the classical values.

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> descend = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      current.push_back(part);
      descend(left - part, part);
      current.pop_back();
    }
  };
  descend(n, n);
  return out;
}

void criterion_cell_engine() {
  for (int n = 1; n <= 6; ++n) {
    for (const std::vector<int>& shape : integer_partitions(n)) {
      std::map<std::string, int> counts;
      for (std::size_t i = 0; i < shape.size(); ++i) {
        counts["c" + std::to_string(i)] = shape[i];
      }
      const ColourMultiset alpha(counts);
      for (int d = 2; d <= 3; ++d) {
        ParityMap odd;
        for (const auto& [name, count] : counts) odd.bits[name] = 1;
        fn_complex(alpha, d, ParityMap::trivial(alpha));
        fn_complex(alpha, d, odd);
      }
    }
  }

  const auto group_eq = [](const AbelianGroup& g, std::int64_t betti,
                           std::vector<int> torsion) {
    std::vector<Int> t(torsion.begin(), torsion.end());
    return g.betti == betti && g.torsion == t;
  };

  const ColourMultiset two_ordered({{"a", 1}, {"b", 1}});
  const GradedAbelianGroup m11 = twisted_homology(two_ordered, 2,
                                                  ParityMap::trivial(two_ordered));
  expect(group_eq(m11.at(0), 1, {}) && group_eq(m11.at(1), 1, {}) &&
             m11.at(2).is_zero(),
         "M(R^2; (1,1)) != (Z, Z)");

  const ColourMultiset pair({{"a", 2}});
  const GradedAbelianGroup m2 = twisted_homology(pair, 2, ParityMap::trivial(pair));
  expect(group_eq(m2.at(0), 1, {}) && group_eq(m2.at(1), 1, {}) && m2.at(2).is_zero(),
         "M(R^2; (2), trivial) != (Z, Z)");

  ParityMap odd_pair;
  odd_pair.bits["a"] = 1;
  const GradedAbelianGroup m2odd = twisted_homology(pair, 2, odd_pair);
  expect(group_eq(m2odd.at(0), 0, {2}) && m2odd.at(1).is_zero(),
         "M(R^2; (2), odd) != (Z/2, 0)");

  const GradedAbelianGroup m2space = twisted_homology(pair, 3, ParityMap::trivial(pair));
  expect(group_eq(m2space.at(0), 1, {}) && group_eq(m2space.at(1), 0, {2}) &&
             m2space.at(2).is_zero(),
         "M(R^3; (2), trivial) != (Z, Z/2, 0)");

  for (int n = 2; n <= 4; ++n) {
    const ColourMultiset a({{"a", n}});
    const GradedAbelianGroup h = twisted_homology(a, 2, ParityMap::trivial(a));
    expect(group_eq(h.at(1), 1, {}),
           "H_1(C_" + std::to_string(n) + "(R^2)) != Z");
  }
}

// ---------------------------------------------------------------------------
// 5. Stabilization: for the empty tuple and each weight-2 tuple at k = 2,
//    p = 1, the modules at consecutive n agree in every certified degree,
//    all the way to n = 6.

void criterion_stabilization() {
  std::vector<LambdaTuple> tuples;
  tuples.emplace_back(2);
  for (const EntanglementType& e : enumerate_types_uniform(2, 2)) {
    LambdaTuple t(2);
    t.set(e, 1);
    tuples.push_back(std::move(t));
  }
  expect(tuples.size() == 3, "expected the empty tuple and two weight-2 tuples");

  for (const LambdaTuple& lambda : tuples) {
    const int base = lambda.size();
    GradedAbelianGroup prev;
    for (int n = base; n <= 6; ++n) {
      const TypeMultiset at_n = lambda_bracket(lambda, n);
      const GradedAbelianGroup cur =
          twisted_homology(colours_of(at_n), 2, parity_of(at_n, 1));
      if (n > base) {
        const int certified = (n - 1 - base) / 2;
        for (int q = 0; q <= certified; ++q) {
          expect(prev.at(q) == cur.at(q),
                 "stabilisation violated at degree " + std::to_string(q) +
                     ", n = " + std::to_string(n) + " (tuple " + lambda.to_text() +
                     ")");
        }
      }
      prev = cur;
    }
    // The assembler's own reader enforces the same agreement internally.
    stabilize_M(lambda, 1, 2);
  }
}

// ---------------------------------------------------------------------------
// 6. Stable pipeline end to end: at k = 1 the assembly must reproduce the
//    plain configuration-space answer read directly off the cell engine; at
//    k = 2, p = 1 the degree-0 part is checked against an independent
//    coinvariants computation before trusting the low-degree values.

// Degree 0 of the twisted complex, computed from first principles: for
// d >= 2 the configuration space is connected, so H_0 is Z modulo the
// identifications w = sign * w induced by adjacent swaps. A swap of two
// points of one odd colour gives sign -1, forcing Z/2; otherwise Z.
AbelianGroup coinvariants_oracle(const TypeMultiset& alpha, int p) {
  for (const auto& [type, count] : alpha) {
    if (count >= 2 && parity_of_type(type, p) == 1) return AbelianGroup{0, {Int(2)}};
  }
  return AbelianGroup{1, {}};
}

void criterion_pipeline() {
  for (int p = 1; p <= 2; ++p) {
    const StableAssembly points = stable_homology(1, p, 2);
    expect(points.complete(2), "k = 1 assembly must certify through degree 2");
    const ColourMultiset direct({{"a", 6}});
    const GradedAbelianGroup reference =
        twisted_homology(direct, p + 1, ParityMap::trivial(direct));
    for (int q = 0; q <= 2; ++q) {
      expect(points.total.at(q) == reference.at(q),
             "k = 1 pipeline differs from the direct computation at degree " +
                 std::to_string(q) + ", p = " + std::to_string(p));
    }
  }

  // Independent degree-0 check over every multiset the k = 2 assembly reads.
  for (const LambdaTuple& lambda : enumerate_lambda(2, 1, 1)) {
    for (int n = lambda.size(); n <= 4; ++n) {
      const TypeMultiset at_n = lambda_bracket(lambda, n);
      if (at_n.empty()) continue;
      const GradedAbelianGroup h =
          twisted_homology(colours_of(at_n), 2, parity_of(at_n, 1));
      expect(h.at(0) == coinvariants_oracle(at_n, 1),
             "engine degree 0 disagrees with the coinvariants oracle");
    }
  }

  const StableAssembly pairs = stable_homology(2, 1, 1);
  expect(pairs.complete(1), "k = 2 assembly must certify through degree 1");
  expect(pairs.total.at(0) == AbelianGroup{1, {}}, "k = 2 degree 0 is not Z");
  expect(pairs.total.at(1) == AbelianGroup{3, {}}, "k = 2 degree 1 is not Z^3");
}

// ---------------------------------------------------------------------------
// 7. Formula evaluators: one non-base label of size 2, p = 1, degrees <= 5.

void criterion_formulas() {
  LabelSystem sys{Field{}};
  sys.set_discrete(2, 1);
  const FormulaResult f = iterated_formula(sys, 1, 5);
  expect(f.certified, "iterated formula must certify at p = 1");
  const std::vector<std::pair<int, int>> wanted = {
      {0, 0}, {1, 0}, {2, 1}, {3, 2}, {4, 10}, {5, 74}};
  for (const auto& [degree, rank] : wanted) {
    expect(f.total.rank_at(degree) == Int(rank),
           "iterated formula rank mismatch at degree " + std::to_string(degree));
  }
}

// ---------------------------------------------------------------------------
// 8. Determinism: the selftest output is byte-identical across thread counts.

void criterion_determinism() {
  std::ostringstream one, four, eight;
  expect(run_selftest(one, 1) == 0, "selftest failed at 1 thread");
  expect(run_selftest(four, 4) == 0, "selftest failed at 4 threads");
  expect(run_selftest(eight, 8) == 0, "selftest failed at 8 threads");
  expect(one.str() == four.str() && four.str() == eight.str(),
         "selftest output varies with the thread count");
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"free-monoid-suite", 10, criterion_free_monoid},
      {"discrete-bar-oracle", 120, criterion_discrete_bar},
      {"chi-homomorphism-suite", 10, criterion_chi},
      {"cell-engine-known-answers", 300, criterion_cell_engine},
      {"stabilization-suite", 600, criterion_stabilization},
      {"stable-pipeline-end-to-end", 900, criterion_pipeline},
      {"formula-evaluators", 1, criterion_formulas},
      {"thread-determinism", 0, criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      error = "exceeded the time budget of " + std::to_string(c.budget_seconds) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", seconds);
    if (error.empty()) {
      std::cout << "PASS " << c.name << " (" << timing << ")\n";
    } else {
      ++failures;
      std::cout << "FAIL " << c.name << " (" << timing << "): " << error << "\n";
    }
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) +
                                    " criteria failed")
            << std::endl;
  return failures;
}
