#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "xcl/combinatorics.hpp"
#include "xcl/disintegration.hpp"
#include "xcl/extremal.hpp"
#include "xcl/invariants.hpp"

using namespace xcl;

namespace {

// Peels vertices of degree <= t in the order given by `priority` (first
// eligible vertex in the list goes next); returns the surviving set.
VertexSet peel(const Graph& g, int t, const std::vector<int>& priority) {
  VertexSet alive = g.vertices();
  for (bool progress = true; progress;) {
    progress = false;
    for (int v : priority) {
      if (!(alive & bit(v)) || popcount(g.neighbors(v) & alive) > t) continue;
      alive &= ~bit(v);
      progress = true;
      break;
    }
  }
  return alive;
}

}  // namespace

TEST_CASE("core examples", "[disintegration]") {
  CHECK(core(cycle(7), 2).core_is_null());
  const auto k5 = core(complete(5), 3);
  CHECK(k5.core == complete(5));
  CHECK(k5.deleted.empty());
  for (int k = 2; k <= 5; ++k) {
    const auto trace = core(join(complete(k), empty(6)), k);
    CHECK(trace.core_is_null());
    REQUIRE(trace.deleted.size() == static_cast<std::size_t>(k + 6));
    CHECK(trace.deleted.front() == std::pair{k, k});
  }
  const auto f = core(build_F(15, 14, 7), 7);
  CHECK(f.core_is_null());
  CHECK(f.deleted.size() == 15);
}

TEST_CASE("core is independent of the deletion order", "[disintegration][property]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const int t = static_cast<int>(rng() % 6);
    const auto trace = core(g, t);
    for (const auto& [v, d] : trace.deleted) CHECK(d <= t);
    if (!trace.core_is_null()) CHECK(min_degree(trace.core) >= t + 1);
    CHECK(trace.core == induced_subgraph(g, trace.core_vertices));
    for (int order = 0; order < 10; ++order)
      REQUIRE(peel(g, t, oracle::random_permutation(rng, n)) == trace.core_vertices);
    // Maximality: restoring any deleted vertex leaves a vertex of degree <= t.
    for (const auto& [v, d] : trace.deleted) {
      const Graph back = induced_subgraph(g, trace.core_vertices | bit(v));
      CHECK(min_degree(back) <= t);
    }
    for (int w = 0; w < n; ++w) {
      if (degree(g, w) > t) continue;
      const auto seeded = core_with_seed(g, t, w);
      CHECK(seeded.deleted.front().first == w);
      CHECK(seeded.core_vertices == trace.core_vertices);
    }
  }
}

TEST_CASE("seed degree is checked", "[disintegration]") {
  try {
    core_with_seed(complete(5), 3, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSeedDegreeTooHigh);
  }
}

TEST_CASE("seeded accounting on G", "[disintegration]") {
  // Even c: the core is null and the charge is the null-core bound.
  // Odd c: the hub and the two-vertex clique part survive as K_{t+2}.
  for (int n = 6; n <= 14; ++n)
    for (int c = 4; c <= n - 1; ++c)
      for (int k = 2; 2 * k <= c; ++k) {
        const int t = c / 2;
        const Graph g = build_G(n, c, k);
        int w = 0;
        while (degree(g, w) != k) ++w;
        const auto trace = core_with_seed(g, t, w);
        if (c % 2 == 0) {
          REQUIRE(trace.core_is_null());
        } else {
          REQUIRE(trace.core == complete(t + 2));
        }
        for (int s = 2; s <= 4; ++s) {
          CAPTURE(n, c, k, s);
          const Count bound =
              c % 2 == 0 ? binomial(k, s - 1) + binomial(n - t - 1, 1) * binomial(t, s - 1) +
                               binomial(t, s)
                         : binomial(k, s - 1) + binomial(n - t - 3, 1) * binomial(t, s - 1) +
                               binomial(t + 2, s);
          CHECK(clique_accounting(trace, s) == bound);
          CHECK(count_cliques(g)[s] <= bound);
        }
      }
}

TEST_CASE("closure examples", "[disintegration]") {
  CHECK(circumference_closure(cycle(4), 0) == complete(4));
  CHECK(circumference_closure(cycle(5), 0) == complete(5));
  CHECK(is_edge_maximal(complete(6), 0));
  CHECK_FALSE(is_edge_maximal(cycle(6), 0));
  try {
    circumference_closure(empty(kExactSolverMaxOrder + 1), 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
}

TEST_CASE("closure keeps circumference and protected vertices", "[disintegration][property]") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const VertexSet protect = rng() & low_mask(n) & rng();
    const Graph closed = circumference_closure(g, protect);
    CHECK(oracle::circumference(closed) == oracle::circumference(g));
    for (int v : members(protect)) CHECK(closed.neighbors(v) == g.neighbors(v));
    for (int u = 0; u < n; ++u) CHECK((g.neighbors(u) & ~closed.neighbors(u)) == 0);
    CHECK(is_edge_maximal(closed, protect));
  }
}

TEST_CASE("proof shadow brackets the clique count", "[disintegration][property]") {
  // Extremal constructions plus random 2-connected nonhamiltonian graphs.
  std::mt19937_64 rng(47);
  std::vector<Graph> graphs;
  for (const auto& n : {6, 7, 8})
    for (int c = 4; c <= n - 1; ++c)
      for (int k = 2; 2 * k <= c; ++k) {
        graphs.push_back(build_F(n, c, k));
        graphs.push_back(build_G(n, c, k));
      }
  while (graphs.size() < 400) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_graph(rng, n, 0.55);
    if (min_degree(g) >= 2 && oracle::two_connected(g) && oracle::circumference(g) < n)
      graphs.push_back(g);
  }
  for (const Graph& g : graphs) {
    const int n = g.order();
    const int c = oracle::circumference(g);
    const int k = min_degree(g);
    if (2 * k > c) continue;
    for (int s = 2; s <= 4; ++s) {
      const ProofShadow shadow = proof_shadow(g, s);
      CAPTURE(n, c, k, s);
      CHECK(shadow.c == c);
      CHECK(shadow.k == k);
      CHECK(count_cliques(g)[s] <= count_cliques(shadow.closed)[s]);
      CHECK(count_cliques(shadow.closed)[s] <= shadow.trace_accounting);
      CHECK(count_cliques(shadow.closed)[s] <= shadow.bound);
      CHECK(shadow.bound <= phi_s(n, c, k, s));
      if (shadow.which == ProofShadow::Case::kCompleteCore) {
        CHECK(shadow.core_complete);
        CHECK(shadow.degree_fits);
        CHECK(shadow.second_core_matches);
      }
    }
  }
}
