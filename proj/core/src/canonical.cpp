#include "xcl/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "xcl/graph6.hpp"

namespace xcl {

namespace {

using Partition = std::vector<VertexSet>;  // ordered cells
using Key = std::vector<VertexSet>;        // adjacency rows in canonical order

// Splits cells by neighbor counts into every other cell until the partition
// is equitable. Pieces replace their parent in place, ordered by count.
void refine(std::span<const VertexSet> adj, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      const VertexSet splitter = cells[w];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const VertexSet cell = cells[x];
        if (popcount(cell) < 2) continue;
        std::array<VertexSet, kMaxOrder + 1> by_count{};
        int lo = kMaxOrder;
        int hi = 0;
        for (int v : members(cell)) {
          const int c = popcount(adj[static_cast<std::size_t>(v)] & splitter);
          by_count[static_cast<std::size_t>(c)] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        Partition pieces;
        for (int c = lo; c <= hi; ++c)
          if (by_count[static_cast<std::size_t>(c)])
            pieces.push_back(by_count[static_cast<std::size_t>(c)]);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x),
                     pieces.begin(), pieces.end());
        x += pieces.size() - 1;
        changed = true;
      }
    }
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

struct Leaf {
  Key key;
  std::vector<int> position;  // vertex -> canonical position
  std::vector<int> path;      // individualized vertices
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  Leaf run() {
    Partition root;
    if (n_ > 0) {
      // Start from the degree partition so refinement begins informed.
      std::array<VertexSet, kMaxOrder> by_degree{};
      for (int v = 0; v < n_; ++v)
        by_degree[static_cast<std::size_t>(popcount(g_.rows()[static_cast<std::size_t>(v)]))] |= bit(v);
      for (VertexSet cell : by_degree)
        if (cell) root.push_back(cell);
      refine(g_.rows(), root);
    }
    std::vector<int> path;
    descend(root, path);
    return best_;
  }

 private:
  void descend(const Partition& cells, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](VertexSet c) { return popcount(c) > 1; });
    if (target == cells.end()) {
      visit_leaf(cells, path);
      return;
    }
    const auto target_index = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> explored;
    for (int v : members(*target)) {
      if (pruned_by_orbit(path, explored, v)) continue;
      explored.push_back(v);

      Partition child = cells;
      child[target_index] &= ~bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target_index), bit(v));
      refine(g_.rows(), child);
      path.push_back(v);
      descend(child, path);
      path.pop_back();

      if (unwind_to_ >= 0) {
        if (unwind_to_ < depth) return;
        unwind_to_ = -1;
      }
    }
  }

  bool pruned_by_orbit(const std::vector<int>& path,
                       const std::vector<int>& explored, int v) const {
    if (explored.empty() || generators_.empty()) return false;
    UnionFind orbits(n_);
    bool any = false;
    for (const auto& gamma : generators_) {
      const bool fixes_path = std::all_of(path.begin(), path.end(), [&](int p) {
        return gamma[static_cast<std::size_t>(p)] == p;
      });
      if (!fixes_path) continue;
      any = true;
      for (int u = 0; u < n_; ++u) orbits.unite(u, gamma[static_cast<std::size_t>(u)]);
    }
    if (!any) return false;
    const int root = orbits.find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int u) { return orbits.find(u) == root; });
  }

  void visit_leaf(const Partition& cells, const std::vector<int>& path) {
    Leaf leaf;
    leaf.position.assign(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < cells.size(); ++i)
      leaf.position[static_cast<std::size_t>(std::countr_zero(cells[i]))] = static_cast<int>(i);
    leaf.key.assign(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
      VertexSet row = 0;
      for (int u : members(g_.rows()[static_cast<std::size_t>(v)]))
        row |= bit(leaf.position[static_cast<std::size_t>(u)]);
      leaf.key[static_cast<std::size_t>(leaf.position[static_cast<std::size_t>(v)])] = row;
    }
    leaf.path = path;

    if (!have_first_) {
      have_first_ = true;
      first_ = leaf;
      best_ = std::move(leaf);
      return;
    }
    if (leaf.key == first_.key) {
      record_automorphism(first_, leaf);
      return;
    }
    if (leaf.key == best_.key) {
      record_automorphism(best_, leaf);
      return;
    }
    if (leaf.key > best_.key) best_ = std::move(leaf);
  }

  // `from` and `to` have identical keys, so mapping vertices through equal
  // canonical positions is an automorphism. When it also carries `from`'s
  // path onto the current one, the current subtree mirrors an explored one
  // and the search can jump back to where the two paths diverged.
  void record_automorphism(const Leaf& from, const Leaf& to) {
    std::vector<int> at_position(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      at_position[static_cast<std::size_t>(to.position[static_cast<std::size_t>(v)])] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      gamma[static_cast<std::size_t>(v)] =
          at_position[static_cast<std::size_t>(from.position[static_cast<std::size_t>(v)])];

    std::size_t diverge = 0;
    while (diverge < from.path.size() && diverge < to.path.size() &&
           from.path[diverge] == to.path[diverge])
      ++diverge;
    bool maps_paths = diverge < from.path.size() && diverge < to.path.size();
    for (std::size_t i = 0; maps_paths && i < diverge; ++i)
      maps_paths = gamma[static_cast<std::size_t>(from.path[i])] == from.path[i];
    if (maps_paths)
      maps_paths = gamma[static_cast<std::size_t>(from.path[diverge])] == to.path[diverge];

    generators_.push_back(std::move(gamma));
    if (maps_paths) unwind_to_ = static_cast<int>(diverge);
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<std::vector<int>> generators_;
  int unwind_to_ = -1;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Leaf leaf = Search(g).run();
  CanonicalForm out;
  out.graph = Graph(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (int u : members(leaf.key[static_cast<std::size_t>(v)]))
      if (v < u) out.graph.add_edge(v, u);
  out.labeling = std::move(leaf.position);
  return out;
}

CanonicalLabel canonical_label(const Graph& g) {
  return CanonicalLabel(encode_graph6(canonical_form(g).graph));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || size(g) != size(h)) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_label(g) == canonical_label(h);
}

}  // namespace xcl
