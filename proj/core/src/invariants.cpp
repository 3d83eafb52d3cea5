#include "xcl/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "xcl/combinatorics.hpp"

namespace xcl {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Subset DP for cycles. For each start s (the smallest vertex of the cycle),
// reach[S] holds the endpoints v such that some path from s through exactly
// {s} ∪ S ends at v, where S ranges over vertices above s.
int circumference_dp(const Graph& g) {
  const int n = g.order();
  if (n < 3) return 0;
  std::vector<std::uint32_t> reach;
  std::vector<std::uint32_t> nbr;
  int best = 0;
  for (int s = 0; s + 2 < n && best < n - s; ++s) {
    const int m = n - s - 1;
    const std::uint32_t start_nbr = static_cast<std::uint32_t>(g.rows()[idx(s)] >> (s + 1));
    if (popcount(start_nbr) < 2) continue;
    nbr.assign(idx(m), 0);
    for (int i = 0; i < m; ++i)
      nbr[idx(i)] = static_cast<std::uint32_t>(g.rows()[idx(s + 1 + i)] >> (s + 1));
    const std::size_t states = std::size_t{1} << m;
    reach.assign(states, 0);
    for (int i : members(start_nbr)) reach[std::size_t{1} << i] = 1u << i;
    for (std::size_t set = 1; set < states; ++set) {
      const std::uint32_t ends = reach[set];
      if (!ends) continue;
      const int len = std::popcount(set) + 1;
      if (len >= 3 && (ends & start_nbr)) best = std::max(best, len);
      for (int v : members(ends)) {
        const std::uint32_t ext = nbr[idx(v)] & ~static_cast<std::uint32_t>(set);
        for (int u : members(ext)) reach[set | (std::size_t{1} << u)] |= 1u << u;
      }
    }
  }
  return best;
}

// reach[S] = endpoints of paths visiting exactly S (any start).
std::vector<std::uint32_t> path_reach(const Graph& g) {
  const int n = g.order();
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint32_t> reach(states, 0);
  for (int v = 0; v < n; ++v) reach[std::size_t{1} << v] = 1u << v;
  for (std::size_t set = 1; set < states; ++set) {
    const std::uint32_t ends = reach[set];
    if (!ends) continue;
    for (int v : members(ends)) {
      const auto ext = static_cast<std::uint32_t>(g.rows()[idx(v)]) &
                       ~static_cast<std::uint32_t>(set);
      for (int u : members(ext)) reach[set | (std::size_t{1} << u)] |= 1u << u;
    }
  }
  return reach;
}

std::vector<int> longest_path_dp(const Graph& g) {
  const auto reach = path_reach(g);
  std::size_t best_set = 1;
  for (std::size_t set = 1; set < reach.size(); ++set)
    if (reach[set] && std::popcount(set) > std::popcount(best_set)) best_set = set;
  std::vector<int> out;
  std::size_t set = best_set;
  int v = std::countr_zero(reach[set]);
  out.push_back(v);
  while (std::popcount(set) > 1) {
    const std::size_t prev = set & ~(std::size_t{1} << v);
    const std::uint32_t cand = reach[prev] & static_cast<std::uint32_t>(g.rows()[idx(v)]);
    v = std::countr_zero(cand);
    out.push_back(v);
    set = prev;
  }
  return out;
}

// Vertices reachable from `from` inside `allowed` (from itself included).
VertexSet component_of(const Graph& g, int from, VertexSet allowed) {
  VertexSet reached = bit(from);
  VertexSet frontier = bit(from);
  while (frontier) {
    VertexSet next = 0;
    for (int v : members(frontier)) next |= g.rows()[idx(v)];
    next &= allowed & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

// Backtracking for orders above the DP limit. Branches are cut when the
// current length plus everything still reachable cannot beat the best.
class LongSearch {
 public:
  LongSearch(const Graph& g, const SolverBudget& budget)
      : g_(g), deadline_(budget) {}

  int cycle() {
    const int n = g_.order();
    best_ = 0;
    for (int s = 0; s + 2 < n && best_ < n - s; ++s) {
      start_ = s;
      allowed_ = g_.vertices() & ~low_mask(s + 1);
      extend_cycle(s, bit(s), 1);
    }
    return best_;
  }

  std::vector<int> path() {
    const int n = g_.order();
    best_ = 0;
    for (int s = 0; s < n && best_ < n; ++s) {
      current_.assign(1, s);
      extend_path(s, bit(s));
    }
    return best_path_;
  }

 private:
  void tick() {
    if ((++nodes_ & 0xfff) == 0) deadline_.check("longest-cycle search");
  }

  void extend_cycle(int v, VertexSet used, int len) {
    tick();
    if (len >= 3 && (g_.rows()[idx(v)] & bit(start_))) best_ = std::max(best_, len);
    const VertexSet free = allowed_ & ~used;
    if (len + popcount(component_of(g_, v, free | bit(v))) - 1 <= best_) return;
    for (int u : members(g_.rows()[idx(v)] & free)) extend_cycle(u, used | bit(u), len + 1);
  }

  void extend_path(int v, VertexSet used) {
    tick();
    const int len = static_cast<int>(current_.size());
    if (len > best_) {
      best_ = len;
      best_path_ = current_;
    }
    const VertexSet free = g_.vertices() & ~used;
    if (len + popcount(component_of(g_, v, free | bit(v))) - 1 <= best_) return;
    for (int u : members(g_.rows()[idx(v)] & free)) {
      current_.push_back(u);
      extend_path(u, used | bit(u));
      current_.pop_back();
    }
  }

  const Graph& g_;
  Deadline deadline_;
  int start_ = 0;
  VertexSet allowed_ = 0;
  int best_ = 0;
  std::vector<int> current_;
  std::vector<int> best_path_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

int CliqueProfile::clique_number() const {
  int omega = 0;
  for (std::size_t s = 0; s < counts.size(); ++s)
    if (counts[s] > 0) omega = static_cast<int>(s) + 1;
  return omega;
}

int circumference(const Graph& g, const SolverBudget& budget) {
  if (g.order() <= kExactSolverMaxOrder) return circumference_dp(g);
  return LongSearch(g, budget).cycle();
}

std::vector<int> longest_path(const Graph& g, const SolverBudget& budget) {
  if (g.order() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "longest path of the null graph");
  }
  if (g.order() <= kExactSolverMaxOrder) return longest_path_dp(g);
  return LongSearch(g, budget).path();
}

int detour_order(const Graph& g, const SolverBudget& budget) {
  if (g.order() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "detour order of the null graph");
  }
  if (g.order() <= kExactSolverMaxOrder) {
    const auto reach = path_reach(g);
    int best = 1;
    for (std::size_t set = 1; set < reach.size(); ++set)
      if (reach[set]) best = std::max(best, std::popcount(set));
    return best;
  }
  return static_cast<int>(LongSearch(g, budget).path().size());
}

bool is_hamiltonian(const Graph& g, const SolverBudget& budget) {
  return g.order() >= 3 && circumference(g, budget) == g.order();
}

bool is_traceable(const Graph& g, const SolverBudget& budget) {
  return g.order() >= 1 && detour_order(g, budget) == g.order();
}

VertexSet articulation_points(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(idx(n), -1);
  std::vector<int> low(idx(n), 0);
  VertexSet cut = 0;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[idx(v)] = low[idx(v)] = timer++;
    int children = 0;
    for (int u : members(g.rows()[idx(v)])) {
      if (u == parent) continue;
      if (disc[idx(u)] >= 0) {
        low[idx(v)] = std::min(low[idx(v)], disc[idx(u)]);
        continue;
      }
      ++children;
      dfs(u, v);
      low[idx(v)] = std::min(low[idx(v)], low[idx(u)]);
      if (parent >= 0 && low[idx(u)] >= disc[idx(v)]) cut |= bit(v);
    }
    if (parent < 0 && children > 1) cut |= bit(v);
  };
  for (int v = 0; v < n; ++v)
    if (disc[idx(v)] < 0) dfs(v, -1);
  return cut;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && articulation_points(g) == 0;
}

CliqueProfile count_cliques(const Graph& g) {
  const int n = g.order();
  CliqueProfile profile;
  profile.counts.assign(idx(n), 0);
  if (n == 0) return profile;

  // Degeneracy order: repeatedly take a minimum-degree vertex (lowest index
  // on ties) from what remains.
  std::vector<int> order;
  std::vector<int> rank(idx(n));
  VertexSet left = g.vertices();
  while (left) {
    int pick = -1;
    int pick_deg = kMaxOrder + 1;
    for (int v : members(left)) {
      const int d = popcount(g.rows()[idx(v)] & left);
      if (d < pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    rank[idx(pick)] = static_cast<int>(order.size());
    order.push_back(pick);
    left &= ~bit(pick);
  }
  std::vector<VertexSet> adj(idx(n), 0);
  for (int v = 0; v < n; ++v)
    for (int u : members(g.rows()[idx(v)])) adj[idx(rank[idx(v)])] |= bit(rank[idx(u)]);

  auto& counts = profile.counts;
  // `cand` holds common later neighbors of a clique of size `depth`.
  std::function<void(VertexSet, int)> expand = [&](VertexSet cand, int depth) {
    counts[idx(depth - 1)] += 1;
    bool is_clique = true;
    for (int u : members(cand)) {
      if ((cand & ~(adj[idx(u)] | bit(u))) != 0) {
        is_clique = false;
        break;
      }
    }
    if (is_clique) {
      const int m = popcount(cand);
      for (int j = 1; j <= m; ++j)
        counts[idx(depth + j - 1)] = checked_add(counts[idx(depth + j - 1)], binomial(m, j));
      return;
    }
    for (int u : members(cand)) expand(cand & adj[idx(u)] & ~low_mask(u + 1), depth + 1);
  };
  for (int v = 0; v < n; ++v) expand(adj[idx(v)] & ~low_mask(v + 1), 1);
  return profile;
}

bool chvatal_hamiltonian(std::span<const int> d) {
  const int n = static_cast<int>(d.size());
  if (n < 3) {
    throw Error(ErrorCode::kInvalidParams, "Chvátal condition needs n >= 3");
  }
  if (!std::is_sorted(d.begin(), d.end())) {
    throw Error(ErrorCode::kUnsortedInput, "degree sequence must be nondecreasing");
  }
  for (int i = 1; 2 * i < n; ++i) {
    if (d[idx(i - 1)] <= i && d[idx(n - i - 1)] < n - i) return false;
  }
  return true;
}

int dirac_lower_bound(const Graph& g) {
  if (g.order() == 0) return 0;
  return std::min(g.order(), 2 * min_degree(g));
}

PathWitness make_path_witness(const Graph& g, std::vector<int> vertices) {
  if (vertices.empty()) {
    throw Error(ErrorCode::kInvalidPath, "path has no vertices");
  }
  VertexSet on_path = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorCode::kInvalidPath, "path vertex " + std::to_string(v) + " out of range");
    }
    if (on_path & bit(v)) {
      throw Error(ErrorCode::kInvalidPath, "path repeats vertex " + std::to_string(v));
    }
    if (i > 0 && !g.has_edge(vertices[i - 1], v)) {
      throw Error(ErrorCode::kInvalidPath, "path step " + std::to_string(vertices[i - 1]) +
                                               "-" + std::to_string(v) + " is not an edge");
    }
    on_path |= bit(v);
  }
  PathWitness w;
  w.m = static_cast<int>(vertices.size()) - 1;
  w.dpx = popcount(g.rows()[idx(vertices.front())] & on_path);
  w.dpy = popcount(g.rows()[idx(vertices.back())] & on_path);
  w.vertices = std::move(vertices);
  return w;
}

int kopylov_bound(const Graph& g, const PathWitness& path) {
  const PathWitness checked = make_path_witness(g, path.vertices);
  if (checked.m != path.m || checked.dpx != path.dpx || checked.dpy != path.dpy) {
    throw Error(ErrorCode::kInvalidPath, "path witness fields disagree with the graph");
  }
  return std::min(checked.m + 1, checked.dpx + checked.dpy);
}

bool is_graphical(std::span<const int> degrees) {
  std::vector<long long> d(degrees.begin(), degrees.end());
  if (std::any_of(d.begin(), d.end(), [](long long x) { return x < 0; })) return false;
  if (std::accumulate(d.begin(), d.end(), 0LL) % 2 != 0) return false;
  std::sort(d.begin(), d.end(), std::greater<>());
  const long long n = static_cast<long long>(d.size());
  long long prefix = 0;
  for (long long k = 1; k <= n; ++k) {
    prefix += d[static_cast<std::size_t>(k - 1)];
    long long tail = 0;
    for (long long i = k; i < n; ++i) tail += std::min(d[static_cast<std::size_t>(i)], k);
    if (prefix > k * (k - 1) + tail) return false;
  }
  return true;
}

}  // namespace xcl
