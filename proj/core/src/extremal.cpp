#include "xcl/extremal.hpp"

#include <algorithm>
#include <string>

#include "xcl/combinatorics.hpp"

namespace xcl {

namespace {

[[noreturn]] void invalid(const std::string& constraint, const std::string& values) {
  throw Error(ErrorCode::kInvalidParams,
              "invalid parameters: requires " + constraint + " (" + values + ")");
}

std::string kv(const char* name, long long value) {
  return std::string(name) + "=" + std::to_string(value);
}

void validate_s(int s) {
  if (s < 2) invalid("s >= 2", kv("s", s));
}

void check_buildable(int n) {
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kOrderOverflow,
                "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
}

// hub ∨ (clique + independent) on vertices [0,hub), [hub,hub+clique), rest.
Graph split_join(int hub, int clique, int independent) {
  const int n = hub + clique + independent;
  check_buildable(n);
  Graph g(n);
  for (int h = 0; h < hub; ++h)
    for (int v = h + 1; v < n; ++v) g.add_edge(h, v);
  for (int a = hub; a < hub + clique; ++a)
    for (int b = a + 1; b < hub + clique; ++b) g.add_edge(a, b);
  return g;
}

void drop_hub_edges(Graph& g, int vertex, int first_hub, int hub_end) {
  for (int h = first_hub; h < hub_end; ++h) g.remove_edge(vertex, h);
}

Count mul(long long a, Count b) {
  if (a < 0) throw Error(ErrorCode::kInvalidParams, "negative coefficient");
  return checked_mul(static_cast<Count>(a), b);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kF: return "F";
    case Family::kG: return "G";
    case Family::kGq: return "Gq";
    case Family::kFprime: return "Fp";
    case Family::kGprime: return "Gp";
  }
  return "?";
}

void validate_nck(int n, int c, int k) {
  const std::string values = kv("n", n) + ", " + kv("c", c) + ", " + kv("k", k);
  if (2 * k < 4) invalid("2k >= 4", values);
  if (c < 2 * k) invalid("c >= 2k", values);
  if (n - 1 < c) invalid("n-1 >= c", values);
}

Graph build_F(int n, int c, int k) {
  validate_nck(n, c, k);
  return split_join(k, c + 1 - 2 * k, n - c - 1 + k);
}

Graph build_G(int n, int c, int k) { return build_Gq(n, c, k, 1); }

Graph build_Gq(int n, int c, int k, int q) {
  validate_nck(n, c, k);
  const int t = c / 2;
  const int independent = n - c - 1 + t;
  if (q < 1 || q > k) invalid("1 <= q <= k", kv("q", q) + ", " + kv("k", k));
  if (q > independent) invalid("q <= n-c-1+t", kv("q", q) + ", n-c-1+t=" + std::to_string(independent));
  Graph g = split_join(t, c + 1 - 2 * t, independent);
  for (int v = n - q; v < n; ++v) drop_hub_edges(g, v, k, t);
  return g;
}

Graph build_Fprime(int n, int p, int k) {
  const std::string values = kv("n", n) + ", " + kv("p", p) + ", " + kv("k", k);
  if (k < 1) invalid("k >= 1", values);
  if (p < 2 * k + 1) invalid("p >= 2k+1", values);
  if (p > n) invalid("p <= n", values);
  return split_join(k, p - 2 * k, n - p + k);
}

Graph build_Gprime(int n, int p, int k) {
  const std::string values = kv("n", n) + ", " + kv("p", p) + ", " + kv("k", k);
  const int t = (p + 1) / 2;
  if (k < 1) invalid("k >= 1", values);
  if (t - 1 < k) invalid("k <= t-1 with t = floor((p+1)/2)", values);
  if (p > n) invalid("p <= n", values);
  Graph g = split_join(t - 1, p + 2 - 2 * t, n - p + t - 1);
  drop_hub_edges(g, n - 1, k, t - 1);
  return g;
}

Graph build(const ConstructionSpec& spec) {
  const auto& x = spec.params;
  switch (spec.family) {
    case Family::kF: return build_F(x.n, x.c, x.k);
    case Family::kG: return build_G(x.n, x.c, x.k);
    case Family::kGq: return build_Gq(x.n, x.c, x.k, x.q);
    case Family::kFprime: return build_Fprime(x.n, x.p, x.k);
    case Family::kGprime: return build_Gprime(x.n, x.p, x.k);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown family");
}

Graph build_ore_extremal(int n) {
  if (n < 3) invalid("n >= 3", kv("n", n));
  return join(complete(1), disjoint_union(complete(n - 2), complete(1)));
}

Graph build_ore_exceptional() { return join(complete(2), empty(3)); }

Graph build_erdos_gallai_extremal(int n, int c) {
  const std::string values = kv("n", n) + ", " + kv("c", c);
  if (c < 3) invalid("c >= 3", values);
  if (n < c) invalid("n >= c", values);
  if ((n - 1) % (c - 1) != 0) invalid("(c-1) | (n-1)", values);
  Graph blocks(0);
  for (int i = 0; i < (n - 1) / (c - 1); ++i) blocks = disjoint_union(blocks, complete(c - 1));
  return join(complete(1), blocks);
}

Count f_s(int n, int c, int k, int s) {
  validate_nck(n, c, k);
  validate_s(s);
  return checked_add(binomial(c + 1 - k, s), mul(n - c - 1 + k, binomial(k, s - 1)));
}

Count g_s(int n, int c, int k, int s) {
  validate_nck(n, c, k);
  validate_s(s);
  const int t = c / 2;
  return checked_add(checked_add(binomial(c + 1 - t, s), mul(n - c - 2 + t, binomial(t, s - 1))),
                     binomial(k, s - 1));
}

Count g_sq(int n, int c, int k, int q, int s) {
  validate_nck(n, c, k);
  validate_s(s);
  const int t = c / 2;
  if (q < 1 || q > k) invalid("1 <= q <= k", kv("q", q) + ", " + kv("k", k));
  if (q > n - c - 1 + t)
    invalid("q <= n-c-1+t", kv("q", q) + ", n-c-1+t=" + std::to_string(n - c - 1 + t));
  return checked_add(checked_add(mul(q, binomial(k, s - 1)), mul(n - q - c - 1 + t, binomial(t, s - 1))),
                     binomial(c + 1 - t, s));
}

Count phi_s(int n, int c, int k, int s) { return std::max(f_s(n, c, k, s), g_s(n, c, k, s)); }

Count h_s_bound(int n, int c, int k, int s) {
  return std::max(f_s(n, c, k, s), f_s(n, c, c / 2, s));
}

Count erdos_h(int n, int k) {
  if (k < 1 || k > (n - 1) / 2)
    invalid("1 <= k <= floor((n-1)/2)", kv("n", n) + ", " + kv("k", k));
  return checked_add(binomial(n - k, 2), mul(k, static_cast<Count>(k)));
}

Count lambda_s(int n, int c, int x, int s) {
  const std::string values = kv("n", n) + ", " + kv("c", c) + ", " + kv("x", x);
  if (c < 4) invalid("c >= 4", values);
  if (n - 1 < c) invalid("n-1 >= c", values);
  if (x < 2 || x > c / 2) invalid("2 <= x <= floor(c/2)", values);
  validate_s(s);
  return checked_add(mul(n - c - 2 + x, binomial(x, s - 1)), binomial(c + 1 - x, s));
}

Count psi(int n, int p, int k) {
  const std::string values = kv("n", n) + ", " + kv("p", p) + ", " + kv("k", k);
  if (p > n - 1) invalid("p <= n-1 (nontraceable)", values);
  if (k < 2) invalid("2k >= 4", values);
  if (p - 1 < 2 * k) invalid("p-1 >= 2k", values);
  return std::max(f_s(n, p - 1, k, 2), g_s(n, p - 1, k, 2));
}

PiecewisePhi phi_piecewise(int n, int k) {
  const std::string values = kv("n", n) + ", " + kv("k", k);
  if (k < 2) invalid("k >= 2", values);
  if (n < 2 * k + 1) invalid("n >= 2k+1", values);

  const ConstructionSpec f_type{Family::kF, {.n = n, .c = n - 1, .k = k}};
  const ConstructionSpec g_type{Family::kG, {.n = n, .c = n - 1, .k = k}};
  const long long nn = n;
  const bool odd = n % 2 == 1;
  PiecewisePhi out;
  if ((odd && n >= 6 * k - 5) || (!odd && n >= 6 * k - 8)) {
    out.value = erdos_h(n, k);
    out.extremal.push_back(f_type);
    if (n == 6 * k - 5 || n == 6 * k - 8) out.extremal.push_back(g_type);
  } else if (odd) {
    out.value = static_cast<Count>((3 * nn * nn - 8 * nn + 5) / 8 + k);
    out.extremal.push_back(g_type);
  } else {
    out.value = static_cast<Count>((3 * nn * nn - 10 * nn + 16) / 8 + k);
    out.extremal.push_back(g_type);
  }
  return out;
}

std::vector<int> chvatal_extreme_sequence(int n, int i, int k) {
  const std::string values = kv("n", n) + ", " + kv("i", i) + ", " + kv("k", k);
  if (k < 1 || i < k) invalid("1 <= k <= i", values);
  if (2 * i > n - 1) invalid("i <= (n-1)/2", values);
  std::vector<int> d;
  d.push_back(k);
  d.insert(d.end(), static_cast<std::size_t>(i - 1), i);
  d.insert(d.end(), static_cast<std::size_t>(n - 2 * i), n - i - 1);
  d.insert(d.end(), static_cast<std::size_t>(i - k), n - 2);
  d.insert(d.end(), static_cast<std::size_t>(k), n - 1);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace xcl
