#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "xcl/canonical.hpp"
#include "xcl/extremal.hpp"
#include "xcl/graph6.hpp"

using namespace xcl;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace

TEST_CASE("C5 is self-complementary", "[canonical]") {
  CHECK(oracle::permutation_canon(cycle(5)) == oracle::permutation_canon(complement(cycle(5))));
  CHECK(are_isomorphic(cycle(5), complement(cycle(5))));
}

TEST_CASE("the two order-5 Ore graphs are distinct", "[canonical]") {
  const Graph a = build_ore_exceptional();
  const Graph b = build_ore_extremal(5);
  REQUIRE(size(a) == 7);
  REQUIRE(size(b) == 7);
  CHECK_FALSE(are_isomorphic(a, b));
}

TEST_CASE("canonical label is a relabeling invariant", "[canonical][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    const CanonicalLabel label = canonical_label(g);
    const Graph h = relabel(g, oracle::random_permutation(rng, n));
    CHECK(canonical_label(h) == label);
    const CanonicalForm form = canonical_form(g);
    CHECK(relabel(g, form.labeling) == form.graph);
    CHECK(parse_graph6(label.str()) == form.graph);
  }
}

TEST_CASE("highly symmetric graphs canonize quickly and consistently", "[canonical]") {
  std::mt19937_64 rng(11);
  for (const Graph& g : {empty(16), complete(16), cycle(16), petersen(),
                         join(empty(8), empty(8)), disjoint_union(cycle(8), cycle(8))}) {
    const CanonicalLabel label = canonical_label(g);
    for (int i = 0; i < 5; ++i)
      CHECK(canonical_label(relabel(g, oracle::random_permutation(rng, g.order()))) == label);
  }
  CHECK_FALSE(are_isomorphic(cycle(16), disjoint_union(cycle(8), cycle(8))));
}

TEST_CASE("labels separate exactly the isomorphism classes for n <= 6", "[canonical]") {
  // Every labeled graph on n vertices; the refinement canonizer and the
  // permutation oracle must induce the same partition.
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, std::string> oracle_for_label;
    std::set<std::string> oracle_classes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = oracle::labeled_graph(n, code);
      const std::string slow = oracle::permutation_canon(g);
      const std::string fast = canonical_label(g).str();
      auto [it, inserted] = oracle_for_label.emplace(fast, slow);
      if (!inserted) REQUIRE(it->second == slow);
      oracle_classes.insert(slow);
    }
    CHECK(oracle_for_label.size() == oracle_classes.size());
  }
}
