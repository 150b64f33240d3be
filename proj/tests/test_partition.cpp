#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

#include "clusterconf/errors.hpp"
#include "clusterconf/partition.hpp"

using namespace clusterconf;

namespace {

int draw(std::mt19937& rng, int n) { return static_cast<int>(rng() % n); }

// Uniform-ish random partition via a random restricted-growth string.
Partition random_partition(std::mt19937& rng, int n) {
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) {
    const int c = draw(rng, static_cast<int>(blocks.size()) + 1);
    if (c == static_cast<int>(blocks.size())) blocks.push_back({x});
    else blocks[static_cast<std::size_t>(c)].push_back(x);
  }
  return Partition(n, blocks);
}

} // namespace

TEST_CASE("partitions validate and canonicalise") {
  const Partition p(3, {{2}, {3, 1}});
  CHECK(p.blocks() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(to_text(p) == "1,3|2");
  CHECK(p.block_of(2) == 1);
  CHECK(p.profile() == std::vector<int>{1, 2});
  CHECK(Partition().empty());

  CHECK_THROWS_AS(Partition(3, {{1, 2}}), invalid_input);      // 3 missing
  CHECK_THROWS_AS(Partition(2, {{1, 2}, {2}}), invalid_input); // 2 twice
  CHECK_THROWS_AS(Partition(2, {{1, 2}, {}}), invalid_input);  // empty block
  CHECK_THROWS_AS(Partition(2, {{1, 3}}), invalid_input);      // out of range
}

TEST_CASE("stacking shifts the second factor and is associative") {
  const Partition a = partition_from_text("1,2");
  const Partition b = partition_from_text("1|2");
  CHECK(to_text(stack(a, b)) == "1,2|3|4");
  CHECK(stack(Partition(), a) == a);
  CHECK(stack(a, Partition()) == a);

  std::mt19937 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const Partition x = random_partition(rng, 1 + draw(rng, 6));
    const Partition y = random_partition(rng, 1 + draw(rng, 6));
    const Partition z = random_partition(rng, 1 + draw(rng, 6));
    CHECK(stack(stack(x, y), z) == stack(x, stack(y, z)));
  }
}

TEST_CASE("straddle criterion marks the indecomposables") {
  CHECK(is_indecomposable(partition_from_text("1")));
  CHECK(is_indecomposable(partition_from_text("1,2")));
  CHECK(is_indecomposable(partition_from_text("1,3|2")));
  CHECK_FALSE(is_indecomposable(partition_from_text("1|2")));
  CHECK_FALSE(is_indecomposable(partition_from_text("1,2|3,4")));
  CHECK_FALSE(is_indecomposable(Partition()));
}

TEST_CASE("factorization inverts stacking") {
  // Only cut is after element 8: the left factor has weight 4.
  const Partition p = partition_from_text("1,5,7|2,4|3,8|6|9,10");
  const std::vector<Partition> factors = factorize(p);
  REQUIRE(factors.size() == 2);
  CHECK(to_text(factors[0]) == "1,5,7|2,4|3,8|6");
  CHECK(to_text(factors[1]) == "1,2");
  CHECK(factors[0].weight() == 4);
  CHECK(factors[1].weight() == 1);
  CHECK(filtration_level(p) == 4);
  CHECK(factorize(Partition()).empty());

  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const Partition q = random_partition(rng, 1 + draw(rng, 10));
    const std::vector<Partition> fs = factorize(q);
    Partition back;
    int level = 0;
    for (const Partition& f : fs) {
      CHECK(is_indecomposable(f));
      back = stack(back, f);
      level = std::max(level, f.weight());
    }
    CHECK(back == q);
    CHECK(filtration_level(q) == level);
  }
}

TEST_CASE("remove_block relabels order-preservingly") {
  const Partition p = partition_from_text("1,3|2,5|4");
  CHECK(to_text(remove_block(p, 0)) == "1,3|2");
  CHECK(to_text(remove_block(p, 1)) == "1,2|3");
  CHECK(to_text(remove_block(p, 2)) == "1,3|2,4");
  CHECK_THROWS_AS(remove_block(p, 3), invalid_input);
  CHECK_THROWS_AS(remove_block(p, -1), invalid_input);
}

TEST_CASE("enumeration counts match Bell numbers") {
  const std::vector<Int> bell = bell_numbers(10);
  CHECK(bell[0] == 1);
  CHECK(bell[5] == 52);
  CHECK(bell[10] == 115975);
  for (int n = 0; n <= 6; ++n)
    CHECK(Int(enumerate_partitions(n).size()) == bell[static_cast<std::size_t>(n)]);
}

TEST_CASE("type counts match the series inversion") {
  const std::vector<Int> counts = count_types_by_inversion(7);
  const std::vector<Int> frozen = {0, 1, 1, 2, 6, 22, 92, 426};
  CHECK(counts == frozen);
  for (int n = 1; n <= 7; ++n)
    CHECK(Int(enumerate_types(n).size()) == counts[static_cast<std::size_t>(n)]);
}

TEST_CASE("uniform type counts match the series inversion") {
  // Totals for k = 2 are the double factorials 1, 3, 15, 105.
  CHECK(Int(enumerate_partitions_with_sizes(4, {2}).size()) == 3);
  CHECK(Int(enumerate_partitions_with_sizes(6, {2}).size()) == 15);
  CHECK(Int(enumerate_partitions_with_sizes(8, {2}).size()) == 105);

  const std::vector<Int> pair_counts = count_types_by_inversion(4, 2);
  const std::vector<Int> frozen = {0, 1, 2, 10, 74};
  CHECK(pair_counts == frozen);
  for (int w = 1; w <= 4; ++w)
    CHECK(Int(enumerate_types_uniform(2, w).size()) ==
          pair_counts[static_cast<std::size_t>(w)]);

  // Singletons: only the one-block type exists.
  CHECK(enumerate_types_uniform(1, 1).size() == 1);
  CHECK(enumerate_types_uniform(1, 2).empty());
  CHECK(enumerate_types_uniform(1, 5).empty());
  CHECK(count_types_by_inversion(5, 1) ==
        std::vector<Int>{0, 1, 0, 0, 0, 0});
}

TEST_CASE("size-restricted enumeration agrees with filtering") {
  std::vector<Partition> restricted = enumerate_partitions_with_sizes(5, {1, 2});
  CHECK(restricted.size() == 26); // involutions of 5 points
  std::vector<Partition> filtered;
  for (const Partition& p : enumerate_partitions(5)) {
    const std::vector<int> prof = p.profile();
    if (std::all_of(prof.begin(), prof.end(), [](int s) { return s <= 2; }))
      filtered.push_back(p);
  }
  // The two enumerations use different (both deterministic) orders.
  std::sort(restricted.begin(), restricted.end());
  std::sort(filtered.begin(), filtered.end());
  CHECK(restricted == filtered);
}

TEST_CASE("enumeration bounds are enforced") {
  CHECK_THROWS_AS(enumerate_partitions(13), infeasible);
  CHECK_THROWS_AS(enumerate_partitions(5, 4), infeasible);
  CHECK_THROWS_AS(enumerate_types(13), infeasible);
  CHECK_THROWS_AS(enumerate_partitions(-1), invalid_input);
}

TEST_CASE("partition text round-trips and rejects junk") {
  for (const Partition& p : enumerate_partitions(5))
    CHECK(partition_from_text(to_text(p)) == p);
  CHECK(to_text(Partition()).empty());
  CHECK(partition_from_text("") == Partition());
  CHECK(to_text(partition_from_text("2|1")) == "1|2"); // canonicalised

  CHECK_THROWS_AS(partition_from_text("1,1|2"), invalid_input);
  CHECK_THROWS_AS(partition_from_text("1,3"), invalid_input);
  CHECK_THROWS_AS(partition_from_text("0,1"), invalid_input);
  CHECK_THROWS_AS(partition_from_text("1||2"), invalid_input);
  CHECK_THROWS_AS(partition_from_text("a"), invalid_input);
  CHECK_THROWS_AS(partition_from_text("1,2|"), invalid_input);
  CHECK_THROWS_AS(partition_from_text("1,2,"), invalid_input);
  CHECK_THROWS_AS(partition_from_text("1,|2"), invalid_input);
  CHECK_THROWS_AS(partition_from_text("|"), invalid_input);
}

TEST_CASE("entanglement types cache weight and profile") {
  const EntanglementType t(partition_from_text("1,3|2"));
  CHECK(t.weight() == 2);
  CHECK(t.size() == 3);
  CHECK(t.profile() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(EntanglementType(partition_from_text("1|2")), invalid_input);
  CHECK_THROWS_AS(EntanglementType(Partition{}), invalid_input);
}
