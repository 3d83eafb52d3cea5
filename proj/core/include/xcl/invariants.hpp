#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xcl/budget.hpp"
#include "xcl/graph.hpp"

namespace xcl {

using Count = std::uint64_t;

// Orders handled by the subset dynamic programs. Larger graphs fall back to
// pruned backtracking under a SolverBudget.
inline constexpr int kExactSolverMaxOrder = 24;

/// counts[s-1] is the number of s-vertex cliques, for s = 1..order.
struct CliqueProfile {
  std::vector<Count> counts;

  // N_s; zero for s outside 1..order.
  Count operator[](int s) const {
    return s >= 1 && s <= static_cast<int>(counts.size())
               ? counts[static_cast<std::size_t>(s - 1)]
               : 0;
  }
  int clique_number() const;

  bool operator==(const CliqueProfile&) const = default;
};

/// A path x = vertices.front() ... y = vertices.back() together with its
/// length m and the number of neighbors of each endpoint that lie on it.
struct PathWitness {
  std::vector<int> vertices;
  int m = 0;
  int dpx = 0;
  int dpy = 0;
};

// Longest cycle length; 0 when g is acyclic.
int circumference(const Graph& g,
                  const SolverBudget& budget = SolverBudget::process_default());

// Number of vertices on a longest path. Throws kEmptyGraph on order 0.
int detour_order(const Graph& g,
                 const SolverBudget& budget = SolverBudget::process_default());

// One longest path, as a vertex sequence.
std::vector<int> longest_path(
    const Graph& g,
    const SolverBudget& budget = SolverBudget::process_default());

// Orders below 3 are never hamiltonian.
bool is_hamiltonian(const Graph& g,
                    const SolverBudget& budget = SolverBudget::process_default());
bool is_traceable(const Graph& g,
                  const SolverBudget& budget = SolverBudget::process_default());

// Connected, order >= 3, and no articulation point.
bool is_two_connected(const Graph& g);
VertexSet articulation_points(const Graph& g);

CliqueProfile count_cliques(const Graph& g);

// Chvátal's degree condition on a nondecreasing sequence of length >= 3.
// True guarantees a Hamilton cycle; false says nothing.
bool chvatal_hamiltonian(std::span<const int> sorted_degrees);

// min{n, 2 * min_degree}; every 2-connected graph has a cycle at least this long.
int dirac_lower_bound(const Graph& g);

// Validates `vertices` as a path in g and fills in m, dpx and dpy.
PathWitness make_path_witness(const Graph& g, std::vector<int> vertices);

// min{m + 1, dpx + dpy}. Throws kInvalidPath unless the witness is a path
// of g with consistent m, dpx and dpy. A lower bound on the circumference
// whenever g is 2-connected.
int kopylov_bound(const Graph& g, const PathWitness& path);

// Erdős–Gallai test: even sum and the prefix inequalities.
bool is_graphical(std::span<const int> degrees);

}  // namespace xcl
