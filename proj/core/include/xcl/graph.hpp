#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "xcl/error.hpp"

namespace xcl {

inline constexpr int kMaxOrder = 64;

// One bit per vertex; bit v set means vertex v is a member.
using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet low_mask(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int popcount(VertexSet s) { return std::popcount(s); }

// Iterates the members of a VertexSet in increasing order:
//   for (int v : members(s)) ...
class Members {
 public:
  class iterator {
   public:
    explicit iterator(VertexSet rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator==(const iterator& other) const = default;

   private:
    VertexSet rest_;
  };

  explicit Members(VertexSet s) : set_(s) {}
  iterator begin() const { return iterator(set_); }
  iterator end() const { return iterator(0); }

 private:
  VertexSet set_;
};

inline Members members(VertexSet s) { return Members(s); }

/// Undirected simple graph on vertices 0..order-1 with one neighbor bitset per
/// vertex. Every mutator keeps the adjacency symmetric and irreflexive.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order,
                          std::span<const std::pair<int, int>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return low_mask(order()); }
  VertexSet neighbors(int v) const;
  bool has_edge(int u, int v) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::span<const VertexSet> rows() const { return adj_; }

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adj_;
};

Graph complete(int n);
Graph empty(int n);
Graph cycle(int n);
Graph path(int n);
Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph delete_edge(const Graph& g, int u, int v);
Graph with_edge(const Graph& g, int u, int v);

// Subgraph induced by `keep`, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

// Vertex v of g becomes vertex image[v] of the result.
Graph relabel(const Graph& g, std::span<const int> image);

int degree(const Graph& g, int v);
int min_degree(const Graph& g);
int size(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);  // nondecreasing
bool is_connected(const Graph& g);

// Symmetric, irreflexive, no bits beyond order.
bool is_well_formed(const Graph& g);

}  // namespace xcl
