#include "xcl/disintegration.hpp"

#include <string>

#include "xcl/combinatorics.hpp"

namespace xcl {

namespace {

DisintegrationTrace disintegrate(const Graph& g, int t, int seed) {
  DisintegrationTrace trace;
  trace.t = t;
  VertexSet left = g.vertices();
  auto remove = [&](int v) {
    trace.deleted.emplace_back(v, popcount(g.rows()[static_cast<std::size_t>(v)] & left));
    left &= ~bit(v);
  };
  if (seed >= 0) remove(seed);
  for (;;) {
    int pick = -1;
    for (int v : members(left)) {
      if (popcount(g.rows()[static_cast<std::size_t>(v)] & left) <= t) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    remove(pick);
  }
  trace.core_vertices = left;
  trace.core = induced_subgraph(g, left);
  for (int v : members(left)) trace.core_labels.push_back(v);
  return trace;
}

}  // namespace

DisintegrationTrace core(const Graph& g, int t) { return disintegrate(g, t, -1); }

DisintegrationTrace core_with_seed(const Graph& g, int t, int seed) {
  const int d = degree(g, seed);
  if (d > t) {
    throw Error(ErrorCode::kSeedDegreeTooHigh,
                "seed vertex " + std::to_string(seed) + " has degree " + std::to_string(d) +
                    " > t=" + std::to_string(t));
  }
  return disintegrate(g, t, seed);
}

Count clique_accounting(const DisintegrationTrace& trace, int s) {
  Count total = binomial(trace.core.order(), s);
  for (auto [v, d] : trace.deleted) total = checked_add(total, binomial(d, s - 1));
  return total;
}

Graph circumference_closure(const Graph& g, VertexSet protect, const SolverBudget& budget) {
  if (g.order() > kExactSolverMaxOrder) {
    throw Error(ErrorCode::kBudgetExceeded,
                "circumference closure needs order <= " + std::to_string(kExactSolverMaxOrder));
  }
  const int c = circumference(g, budget);
  Graph out = g;
  // A rejected pair stays rejected as edges are added (circumference is
  // monotone), so one lexicographic pass reaches an edge-maximal graph.
  for (int u = 0; u < g.order(); ++u) {
    if (protect & bit(u)) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if ((protect & bit(v)) || out.has_edge(u, v)) continue;
      out.add_edge(u, v);
      if (circumference(out, budget) != c) out.remove_edge(u, v);
    }
  }
  return out;
}

bool is_edge_maximal(const Graph& g, VertexSet protect, const SolverBudget& budget) {
  const int c = circumference(g, budget);
  for (int u = 0; u < g.order(); ++u) {
    if (protect & bit(u)) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if ((protect & bit(v)) || g.has_edge(u, v)) continue;
      if (circumference(with_edge(g, u, v), budget) <= c) return false;
    }
  }
  return true;
}

ProofShadow proof_shadow(const Graph& g, int s, const SolverBudget& budget) {
  if (!is_two_connected(g) || is_hamiltonian(g, budget)) {
    throw Error(ErrorCode::kInvalidParams, "proof shadow needs a 2-connected nonhamiltonian graph");
  }
  if (s < 2) throw Error(ErrorCode::kInvalidParams, "requires s >= 2");
  ProofShadow out;
  out.n = g.order();
  out.c = circumference(g, budget);
  out.k = min_degree(g);
  for (int v = 0; v < out.n; ++v) {
    if (degree(g, v) == out.k) {
      out.w = v;
      break;
    }
  }
  const int t = out.c / 2;
  out.closed = circumference_closure(g, bit(out.w), budget);
  out.core_trace = core_with_seed(out.closed, t, out.w);

  if (out.core_trace.core_is_null()) {
    out.which = ProofShadow::Case::kNullCore;
    out.bound = checked_add(checked_add(binomial(out.k, s - 1),
                                        checked_mul(static_cast<Count>(out.n - t - 1), binomial(t, s - 1))),
                            binomial(t, s));
    out.trace_accounting = clique_accounting(out.core_trace, s);
    return out;
  }

  out.which = ProofShadow::Case::kCompleteCore;
  const Graph& d_graph = out.core_trace.core;
  const int d = d_graph.order();
  out.core_complete = size(d_graph) == d * (d - 1) / 2;
  const int x = out.c - d + 1;
  out.degree_fits = out.k <= x;
  if (x < out.k) {
    out.bound = 0;
    return out;
  }
  const DisintegrationTrace second = core_with_seed(out.closed, x, out.w);
  out.second_core_matches = second.core_vertices == out.core_trace.core_vertices;
  out.trace_accounting = clique_accounting(second, s);
  out.bound = checked_add(checked_add(binomial(out.k, s - 1),
                                      checked_mul(static_cast<Count>(out.n - d - 1), binomial(x, s - 1))),
                          binomial(d, s));
  return out;
}

}  // namespace xcl
