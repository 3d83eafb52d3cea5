#pragma once

#include <string_view>
#include <vector>

#include "xcl/graph.hpp"
#include "xcl/invariants.hpp"

namespace xcl {

/// Parameter tuple shared by the constructions and closed forms:
/// order n, circumference c, minimum degree k, clique size s, number q of
/// minimum-degree vertices, detour order p. t is always derived from c.
struct FormulaParams {
  int n = 0;
  int c = 0;
  int k = 0;
  int s = 2;
  int q = 1;
  int p = 0;

  int t() const { return c / 2; }
};

enum class Family { kF, kG, kGq, kFprime, kGprime };

std::string_view to_string(Family family);

struct ConstructionSpec {
  Family family = Family::kF;
  FormulaParams params;

  bool operator==(const ConstructionSpec& o) const {
    return family == o.family && params.n == o.params.n && params.c == o.params.c &&
           params.k == o.params.k && params.q == o.params.q && params.p == o.params.p;
  }
};

// Vertex blocks are laid out hub first, then the clique part, then the
// independent part. Deletions in G and Gq always remove the edges from a
// designated independent vertex (the last ones) to the last t-k hub vertices.

// K_k ∨ (K_{c+1-2k} + co-K_{n-c-1+k}); needs n-1 >= c >= 2k >= 4.
Graph build_F(int n, int c, int k);
// K_t ∨ (K_{c+1-2t} + co-K_{n-c-1+t}) with t = ⌊c/2⌋, minus t-k edges at the
// last independent vertex.
Graph build_G(int n, int c, int k);
// As build_G, applied to the last q independent vertices; 1 <= q <= k.
Graph build_Gq(int n, int c, int k, int q);
// K_k ∨ (K_{p-2k} + co-K_{n-p+k}); detour order p.
Graph build_Fprime(int n, int p, int k);
// K_{t-1} ∨ (K_{p+2-2t} + co-K_{n-p+t-1}) with t = ⌊(p+1)/2⌋, minus t-1-k
// edges at the last independent vertex.
Graph build_Gprime(int n, int p, int k);
Graph build(const ConstructionSpec& spec);

// K_1 ∨ (K_{n-2} + K_1): the nonhamiltonian graph with the most edges.
Graph build_ore_extremal(int n);
// K_2 ∨ co-K_3, the second extremal graph at order 5.
Graph build_ore_exceptional();
// ((n-1)/(c-1)) disjoint copies of K_{c-1}, all joined to one hub vertex.
Graph build_erdos_gallai_extremal(int n, int c);

// Closed forms. All arithmetic is exact; invalid tuples throw
// Error(kInvalidParams) naming the violated constraint.
Count f_s(int n, int c, int k, int s);
Count g_s(int n, int c, int k, int s);
Count g_sq(int n, int c, int k, int q, int s);
Count phi_s(int n, int c, int k, int s);
Count h_s_bound(int n, int c, int k, int s);
Count erdos_h(int n, int k);
Count lambda_s(int n, int c, int x, int s);
Count psi(int n, int p, int k);

struct PiecewisePhi {
  Count value = 0;
  // Families attaining the value, each as a (n, n-1, k) construction.
  std::vector<ConstructionSpec> extremal;
};

// Maximum size of a 2-connected nonhamiltonian graph of order n with
// minimum degree k, by the three-branch closed form.
PiecewisePhi phi_piecewise(int n, int k);

// k, i×(i-1), (n-i-1)×(n-2i), (n-2)×(i-k), (n-1)×k, sorted nondecreasing:
// the extreme degree sequence allowed by a violated Chvátal condition at i.
std::vector<int> chvatal_extreme_sequence(int n, int i, int k);

// Throws Error(kInvalidParams) unless n-1 >= c >= 2k >= 4.
void validate_nck(int n, int c, int k);

}  // namespace xcl
