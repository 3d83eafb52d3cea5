#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "xcl/graph.hpp"

namespace xcl {

/// Isomorphism-invariant name of a graph: the graph6 encoding of its
/// canonical relabeling. Two graphs get equal labels iff they are isomorphic.
class CanonicalLabel {
 public:
  CanonicalLabel() = default;
  explicit CanonicalLabel(std::string form) : form_(std::move(form)) {}

  const std::string& str() const { return form_; }

  auto operator<=>(const CanonicalLabel&) const = default;

 private:
  std::string form_;
};

struct CanonicalForm {
  Graph graph;                // g relabeled by `labeling`
  std::vector<int> labeling;  // labeling[v] = canonical position of vertex v
};

// Equitable-partition refinement with a backtracking search over
// individualizations; automorphisms found at leaves prune sibling orbits.
CanonicalForm canonical_form(const Graph& g);
CanonicalLabel canonical_label(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace xcl

template <>
struct std::hash<xcl::CanonicalLabel> {
  std::size_t operator()(const xcl::CanonicalLabel& label) const noexcept {
    return std::hash<std::string>{}(label.str());
  }
};
