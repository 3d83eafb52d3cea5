#include "xcl/graph.hpp"

#include <algorithm>
#include <string>

namespace xcl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOrderOverflow: return "order-overflow";
    case ErrorCode::kVertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::kNotAnEdge: return "not-an-edge";
    case ErrorCode::kEmptyGraph: return "empty-graph";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kInvalidParams: return "invalid-params";
    case ErrorCode::kUnsortedInput: return "unsorted-input";
    case ErrorCode::kInvalidPath: return "invalid-path";
    case ErrorCode::kSeedDegreeTooHigh: return "seed-degree-too-high";
    case ErrorCode::kBudgetExceeded: return "exceeds-exact-solver-budget";
    case ErrorCode::kOrderTooLarge: return "order-too-large";
    case ErrorCode::kArithmeticOverflow: return "arithmetic-overflow";
  }
  return "unknown";
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw Error(ErrorCode::kOrderOverflow,
                "order " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxOrder));
  }
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  adj_.assign(static_cast<std::size_t>(order), 0);
}

Graph Graph::from_edges(int order,
                        std::span<const std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " not in graph of order " +
                    std::to_string(order()));
  }
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::kInvalidParams,
                "self-loop at vertex " + std::to_string(u));
  }
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) {
    throw Error(ErrorCode::kNotAnEdge, std::to_string(u) + "-" +
                                           std::to_string(v) +
                                           " is not an edge");
  }
  adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty(int n) { return Graph(n); }

Graph cycle(int n) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidParams, "cycle needs at least 3 vertices");
  }
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  check_order(a + h.order());
  Graph out(a + h.order());
  for (int u = 0; u < a; ++u)
    for (int v : members(g.neighbors(u)))
      if (u < v) out.add_edge(u, v);
  for (int u = 0; u < h.order(); ++u)
    for (int v : members(h.neighbors(u)))
      if (u < v) out.add_edge(a + u, a + v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const int a = g.order();
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, a + v);
  return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

Graph with_edge(const Graph& g, int u, int v) {
  Graph out = g;
  out.add_edge(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v : members(keep)) index[static_cast<std::size_t>(v)] = next++;
  Graph out(next);
  for (int u : members(keep))
    for (int v : members(g.neighbors(u) & keep))
      if (u < v)
        out.add_edge(index[static_cast<std::size_t>(u)],
                     index[static_cast<std::size_t>(v)]);
  return out;
}

Graph relabel(const Graph& g, std::span<const int> image) {
  const int n = g.order();
  if (static_cast<int>(image.size()) != n) {
    throw Error(ErrorCode::kInvalidParams, "relabel: permutation size mismatch");
  }
  VertexSet seen = 0;
  for (int x : image) {
    if (x < 0 || x >= n || (seen & bit(x))) {
      throw Error(ErrorCode::kInvalidParams, "relabel: not a permutation");
    }
    seen |= bit(x);
  }
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v : members(g.neighbors(u)))
      if (u < v)
        out.add_edge(image[static_cast<std::size_t>(u)],
                     image[static_cast<std::size_t>(v)]);
  return out;
}

int degree(const Graph& g, int v) { return popcount(g.neighbors(v)); }

int min_degree(const Graph& g) {
  if (g.order() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "minimum degree of the null graph");
  }
  int best = kMaxOrder;
  for (VertexSet row : g.rows()) best = std::min(best, popcount(row));
  return best;
}

int size(const Graph& g) {
  int sum = 0;
  for (VertexSet row : g.rows()) sum += popcount(row);
  return sum / 2;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (VertexSet row : g.rows()) out.push_back(popcount(row));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet reached = bit(0);
  VertexSet frontier = bit(0);
  while (frontier) {
    VertexSet next = 0;
    for (int v : members(frontier)) next |= g.rows()[static_cast<std::size_t>(v)];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == g.vertices();
}

bool is_well_formed(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  for (int u = 0; u < n; ++u) {
    const VertexSet row = g.rows()[static_cast<std::size_t>(u)];
    if (row & ~all) return false;
    if (row & bit(u)) return false;
    for (int v : members(row))
      if (!(g.rows()[static_cast<std::size_t>(v)] & bit(u))) return false;
  }
  return true;
}

}  // namespace xcl
