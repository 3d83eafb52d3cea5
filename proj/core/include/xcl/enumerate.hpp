#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "xcl/graph.hpp"

namespace xcl {

enum class Requirement { kIgnore, kRequire, kForbid };

struct DegreeConstraint {
  enum class Mode { kAny, kExact, kAtLeast };
  Mode mode = Mode::kAny;
  int value = 0;
};

struct CircumferenceConstraint {
  enum class Mode { kAny, kExact, kAtMost };
  Mode mode = Mode::kAny;
  int value = 0;
};

/// Class of graphs to enumerate or ingest. Constraints are conjunctive.
struct SearchFilter {
  DegreeConstraint min_degree;
  CircumferenceConstraint circumference;
  std::optional<int> detour_order;  // exact number of vertices on a longest path
  bool two_connected = false;
  Requirement connected = Requirement::kIgnore;
  Requirement hamiltonian = Requirement::kIgnore;
  Requirement traceable = Requirement::kIgnore;
  // At least this many vertices attain the (exact) minimum degree.
  std::optional<int> min_degree_multiplicity;

  // Throws kInvalidParams on contradictory settings (a multiplicity without
  // an exact minimum degree, or q > k).
  void validate() const;
};

bool matches(const Graph& g, const SearchFilter& filter);

// True when no supergraph of g on the same vertex set can match: the
// constraints that are downward closed under edge addition already fail.
bool excludes_supergraphs(const Graph& g, const SearchFilter& filter);

inline constexpr int kEnumerationMaxOrder = 10;

/// Deterministic partition of the augmentation tree: subtrees rooted at the
/// i-th node of depth `kShardDepth` go to shard i mod count; shallower nodes
/// belong to shard 0.
struct ShardSpec {
  int index = 0;
  int count = 1;
};

// Streams one canonical representative per isomorphism class of n-vertex
// graphs matching `filter`. Children are generated by adding one edge and
// kept only when the new graph's canonical deletion edge leads back to the
// parent class; siblings are deduplicated by canonical form.
// Throws kOrderTooLarge above kEnumerationMaxOrder.
void enumerate_graphs(int n, const SearchFilter& filter,
                      const std::function<void(const Graph&)>& sink,
                      ShardSpec shard = {});

// Runs `jobs` shards concurrently and returns the union ordered by
// canonical label, so the result does not depend on `jobs`.
std::vector<Graph> enumerate_all(int n, const SearchFilter& filter, int jobs = 1);

}  // namespace xcl
