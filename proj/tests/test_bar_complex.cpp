#include <vector>

#include "doctest.h"

#include "clusterconf/bar_complex.hpp"
#include "clusterconf/errors.hpp"

using namespace clusterconf;

namespace {

DiscreteLabels mixed_labels() { return DiscreteLabels::from_text("1:2,2:1"); }

} // namespace

TEST_CASE("label systems parse and print") {
  const DiscreteLabels labels = mixed_labels();
  CHECK(labels.count_for(1) == 2);
  CHECK(labels.count_for(2) == 1);
  CHECK(labels.count_for(3) == 0);
  CHECK(labels.to_text() == "1:2,2:1");
  CHECK(DiscreteLabels::from_text(labels.to_text()).counts == labels.counts);

  CHECK(DiscreteLabels::from_text("").counts.empty());
  CHECK(DiscreteLabels::from_text("3:0").counts.empty()); // zero count dropped
  CHECK_THROWS_AS(DiscreteLabels::from_text("1:2,1:3"), invalid_input);
  CHECK_THROWS_AS(DiscreteLabels::from_text("0:2"), invalid_input);
  CHECK_THROWS_AS(DiscreteLabels::from_text("1:-1"), invalid_input);
  CHECK_THROWS_AS(DiscreteLabels::from_text("1"), invalid_input);
}

TEST_CASE("elements validate their labels") {
  const DiscreteLabels labels = mixed_labels();
  const DElement m = make_element(labels, partition_from_text("1,3|2"), {0, 1});
  CHECK(m.to_text() == "1,3|2:0,1");
  CHECK(m.size() == 3);
  CHECK_FALSE(m.is_identity());
  CHECK(make_element(labels, Partition(), {}).is_identity());

  // Size-2 blocks carry one label (index 0); size-1 blocks carry two.
  CHECK_THROWS_AS(make_element(labels, partition_from_text("1,3|2"), {1, 0}),
                  invalid_input);
  CHECK_THROWS_AS(make_element(labels, partition_from_text("1,3|2"), {0}),
                  invalid_input);
  CHECK_THROWS_AS(make_element(labels, partition_from_text("1,2,3"), {0}),
                  invalid_input); // no size-3 labels
}

TEST_CASE("multiplication stacks partitions and concatenates labels") {
  const DiscreteLabels labels = mixed_labels();
  const DElement a = make_element(labels, partition_from_text("1,2"), {0});
  const DElement b = make_element(labels, partition_from_text("1"), {1});
  const DElement ab = multiply(a, b);
  CHECK(ab.to_text() == "1,2|3:0,1");
  CHECK(multiply(make_element(labels, Partition(), {}), a) == a);
  CHECK(multiply(a, make_element(labels, Partition(), {})) == a);
}

TEST_CASE("decomposition inverts multiplication on every small element") {
  const DiscreteLabels labels = mixed_labels();
  for (int m = 0; m <= 4; ++m) {
    for (const DElement& e : enumerate_elements(labels, m)) {
      const std::vector<DElement> factors = decompose_monoid_element(e);
      DElement back = make_element(labels, Partition(), {});
      for (const DElement& f : factors) {
        CHECK(is_indecomposable(f.xi));
        back = multiply(back, f);
      }
      CHECK(back == e);
    }
  }
  CHECK(decompose_monoid_element(make_element(labels, Partition(), {})).empty());
}

TEST_CASE("element counts follow the label products") {
  // Singleton labels only: one partition per size, two label choices a block.
  const DiscreteLabels twos = DiscreteLabels::from_text("1:2");
  CHECK(enumerate_elements(twos, 3).size() == 8);

  // One label in each of sizes 1 and 2: elements of size m correspond to
  // partitions with block sizes <= 2, i.e. involutions.
  const DiscreteLabels inv = DiscreteLabels::from_text("1:1,2:1");
  CHECK(enumerate_elements(inv, 4).size() == 10);

  CHECK(enumerate_elements(mixed_labels(), 0).size() == 1);
}

TEST_CASE("free generator counts sum label products over types") {
  const DiscreteLabels labels = mixed_labels();
  // Size 4: the six types have profiles {4}, {2,2} x2, {1,3} x2, {1,1,2};
  // only the last four meet this label system: 1 + 1 + 0 + 0 + 4.
  CHECK(free_generator_count(labels, 1) == 2);
  CHECK(free_generator_count(labels, 2) == 1);
  CHECK(free_generator_count(labels, 3) == 2);
  CHECK(free_generator_count(labels, 4) == 6);

  const DiscreteLabels pairs = DiscreteLabels::from_text("2:3");
  CHECK(free_generator_count(pairs, 4) == 18); // 2 types x 3^2 labellings
  CHECK(free_generator_count(pairs, 3) == 0);
}

TEST_CASE("bar homology is free and concentrated in degree one") {
  const DiscreteLabels labels = mixed_labels();
  for (int n = 1; n <= 4; ++n) {
    const ChainComplex complex = build_bar_complex(labels, n);
    const GradedAbelianGroup h = complex.homology();
    for (const auto& [degree, group] : h.groups) {
      CHECK(degree <= 1);
      CHECK(group.torsion.empty());
    }
    CHECK(h.at(0).is_zero());
    CHECK(Int(h.at(1).betti) == free_generator_count(labels, n));
  }
}

TEST_CASE("weight zero gives the unit complex") {
  const ChainComplex complex = build_bar_complex(mixed_labels(), 0);
  const GradedAbelianGroup h = complex.homology();
  CHECK(h.at(0) == AbelianGroup{1, {}});
  CHECK(h.groups.size() == 1);
}

TEST_CASE("degree truncation preserves the low homology") {
  const DiscreteLabels labels = mixed_labels();
  const ChainComplex full = build_bar_complex(labels, 4);
  const ChainComplex cut = build_bar_complex(labels, 4, 2);
  CHECK(cut.top_degree() == 2);
  CHECK(cut.homology(1) == full.homology(1));
}
