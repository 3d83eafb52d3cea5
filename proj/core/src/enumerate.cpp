#include "xcl/enumerate.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <string>

#include "xcl/canonical.hpp"
#include "xcl/graph6.hpp"
#include "xcl/invariants.hpp"

namespace xcl {

namespace {

constexpr int kShardDepth = 5;

using Rows = std::vector<VertexSet>;

Rows rows_of(const Graph& g) { return Rows(g.rows().begin(), g.rows().end()); }

// Lexicographically last edge (by larger endpoint, then smaller) of a
// canonical graph.
std::pair<int, int> canonical_deletion_edge(const Graph& canon) {
  for (int v = canon.order() - 1; v > 0; --v) {
    const VertexSet lower = canon.rows()[static_cast<std::size_t>(v)] & low_mask(v);
    if (lower) return {63 - std::countl_zero(lower), v};
  }
  return {-1, -1};
}

class Augmenter {
 public:
  Augmenter(int n, const SearchFilter& filter, const std::function<void(const Graph&)>& sink,
            ShardSpec shard)
      : n_(n), filter_(filter), sink_(sink), shard_(shard) {}

  void run() {
    const Graph root(n_);
    visit(root, 0);
  }

 private:
  void visit(const Graph& node, int depth) {
    if (depth == kShardDepth) {
      const bool mine = next_shard_slot_++ % static_cast<std::uint64_t>(shard_.count) ==
                        static_cast<std::uint64_t>(shard_.index);
      if (!mine) return;
    }
    if (excludes_supergraphs(node, filter_)) return;
    if ((depth >= kShardDepth || shard_.index == 0) && matches(node, filter_)) sink_(node);

    const Rows parent_rows = rows_of(node);
    std::set<Rows> seen;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (node.has_edge(u, v)) continue;
        CanonicalForm child = canonical_form(with_edge(node, u, v));
        Rows key = rows_of(child.graph);
        if (!seen.insert(key).second) continue;
        const auto [a, b] = canonical_deletion_edge(child.graph);
        if (rows_of(canonical_form(delete_edge(child.graph, a, b)).graph) != parent_rows) continue;
        visit(child.graph, depth + 1);
      }
    }
  }

  int n_;
  const SearchFilter& filter_;
  const std::function<void(const Graph&)>& sink_;
  ShardSpec shard_;
  std::uint64_t next_shard_slot_ = 0;
};

bool requirement_holds(Requirement r, bool value) {
  switch (r) {
    case Requirement::kIgnore: return true;
    case Requirement::kRequire: return value;
    case Requirement::kForbid: return !value;
  }
  return true;
}

}  // namespace

void SearchFilter::validate() const {
  if (min_degree_multiplicity) {
    if (min_degree.mode != DegreeConstraint::Mode::kExact) {
      throw Error(ErrorCode::kInvalidParams,
                  "minimum-degree multiplicity needs an exact minimum degree");
    }
    if (*min_degree_multiplicity < 1 || *min_degree_multiplicity > min_degree.value) {
      throw Error(ErrorCode::kInvalidParams, "requires 1 <= q <= k");
    }
  }
}

bool excludes_supergraphs(const Graph& g, const SearchFilter& f) {
  using CMode = CircumferenceConstraint::Mode;
  if (f.hamiltonian == Requirement::kForbid && is_hamiltonian(g)) return true;
  if (f.circumference.mode != CMode::kAny && circumference(g) > f.circumference.value) return true;
  if (g.order() > 0) {
    if (f.traceable == Requirement::kForbid && is_traceable(g)) return true;
    if (f.detour_order && detour_order(g) > *f.detour_order) return true;
  }
  return false;
}

bool matches(const Graph& g, const SearchFilter& f) {
  using DMode = DegreeConstraint::Mode;
  using CMode = CircumferenceConstraint::Mode;
  const int n = g.order();
  if (f.min_degree.mode != DMode::kAny) {
    if (n == 0) return false;
    const int delta = min_degree(g);
    if (f.min_degree.mode == DMode::kExact && delta != f.min_degree.value) return false;
    if (f.min_degree.mode == DMode::kAtLeast && delta < f.min_degree.value) return false;
    if (f.min_degree_multiplicity) {
      int attaining = 0;
      for (int v = 0; v < n; ++v) attaining += degree(g, v) == delta;
      if (attaining < *f.min_degree_multiplicity) return false;
    }
  }
  if (f.two_connected && !is_two_connected(g)) return false;
  if (f.connected != Requirement::kIgnore &&
      !requirement_holds(f.connected, is_connected(g)))
    return false;
  if (f.circumference.mode != CMode::kAny) {
    const int c = circumference(g);
    if (f.circumference.mode == CMode::kExact && c != f.circumference.value) return false;
    if (f.circumference.mode == CMode::kAtMost && c > f.circumference.value) return false;
  }
  if (f.hamiltonian != Requirement::kIgnore &&
      !requirement_holds(f.hamiltonian, is_hamiltonian(g)))
    return false;
  if (f.traceable != Requirement::kIgnore || f.detour_order) {
    const int p = n == 0 ? 0 : detour_order(g);
    if (!requirement_holds(f.traceable, n > 0 && p == n)) return false;
    if (f.detour_order && p != *f.detour_order) return false;
  }
  return true;
}

void enumerate_graphs(int n, const SearchFilter& filter,
                      const std::function<void(const Graph&)>& sink, ShardSpec shard) {
  if (n < 0 || n > kEnumerationMaxOrder) {
    throw Error(ErrorCode::kOrderTooLarge,
                "built-in enumeration supports orders 0.." + std::to_string(kEnumerationMaxOrder) +
                    "; ingest an external graph6 corpus for n=" + std::to_string(n));
  }
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) {
    throw Error(ErrorCode::kInvalidParams, "shard index outside 0..count-1");
  }
  filter.validate();
  Augmenter(n, filter, sink, shard).run();
}

std::vector<Graph> enumerate_all(int n, const SearchFilter& filter, int jobs) {
  jobs = std::max(jobs, 1);
  std::vector<std::future<std::vector<Graph>>> parts;
  for (int i = 0; i < jobs; ++i) {
    parts.push_back(std::async(std::launch::async, [=, &filter] {
      std::vector<Graph> out;
      enumerate_graphs(n, filter, [&](const Graph& g) { out.push_back(g); }, ShardSpec{i, jobs});
      return out;
    }));
  }
  std::vector<std::pair<std::string, Graph>> keyed;
  for (auto& part : parts)
    for (Graph& g : part.get()) keyed.emplace_back(encode_graph6(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [label, g] : keyed) out.push_back(std::move(g));
  return out;
}

}  // namespace xcl
