#pragma once

#include <utility>
#include <vector>

#include "xcl/budget.hpp"
#include "xcl/graph.hpp"
#include "xcl/invariants.hpp"

namespace xcl {

/// Result of repeatedly deleting vertices of degree <= t.
struct DisintegrationTrace {
  int t = 0;
  // (vertex, degree in the remaining graph when it was deleted), in order.
  std::vector<std::pair<int, int>> deleted;
  VertexSet core_vertices = 0;
  // Induced subgraph on core_vertices, renumbered in increasing order;
  // core_labels[i] is the original label of core vertex i.
  Graph core;
  std::vector<int> core_labels;

  bool core_is_null() const { return core_vertices == 0; }
};

// The (t+1)-core. Always deletes the lowest-indexed vertex of degree <= t;
// the resulting core does not depend on that choice.
DisintegrationTrace core(const Graph& g, int t);

// As core(), but `seed` is deleted first. Throws kSeedDegreeTooHigh if
// degree(g, seed) > t.
DisintegrationTrace core_with_seed(const Graph& g, int t, int seed);

// Sum over deletions of C(degree, s-1) plus C(|core|, s): an upper bound on
// the number of s-cliques, charging each clique to its first deleted vertex.
Count clique_accounting(const DisintegrationTrace& trace, int s);

// Adds, in lexicographic order, every non-edge avoiding `protect` whose
// addition keeps the circumference unchanged. The result is edge-maximal:
// each remaining non-edge avoiding `protect` would lengthen the longest cycle.
// Needs order <= kExactSolverMaxOrder.
Graph circumference_closure(const Graph& g, VertexSet protect,
                            const SolverBudget& budget = SolverBudget::process_default());

bool is_edge_maximal(const Graph& g, VertexSet protect,
                     const SolverBudget& budget = SolverBudget::process_default());

// Executable trace of the upper-bound argument for 2-connected
// nonhamiltonian graphs: close g with respect to a minimum-degree vertex w,
// take the (t+1)-core with t = ⌊c/2⌋, and evaluate the accounting bound of
// whichever case applies.
struct ProofShadow {
  enum class Case { kNullCore, kCompleteCore };

  int n = 0;
  int c = 0;
  int k = 0;
  int w = 0;
  Graph closed;
  DisintegrationTrace core_trace;
  Case which = Case::kNullCore;

  // kNullCore: C(k,s-1) + (n-t-1) C(t,s-1) + C(t,s).
  // kCompleteCore: C(k,s-1) + (n-d-1) C(c-d+1,s-1) + C(d,s), d = |core|.
  Count bound = 0;
  // clique_accounting() of the disintegration the bound is based on.
  Count trace_accounting = 0;

  bool core_complete = true;        // kCompleteCore: core is a clique
  bool degree_fits = true;          // kCompleteCore: k <= c-d+1
  bool second_core_matches = true;  // kCompleteCore: (c-d+2)-core equals the core
};

ProofShadow proof_shadow(const Graph& g, int s,
                         const SolverBudget& budget = SolverBudget::process_default());

}  // namespace xcl
