#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "xcl/canonical.hpp"
#include "xcl/extremal.hpp"
#include "xcl/invariants.hpp"

using namespace xcl;

namespace {

struct Triple {
  int n, c, k;
};

// Every n-1 >= c >= 2k >= 4 with n in [lo, hi].
std::vector<Triple> valid_triples(int lo, int hi) {
  std::vector<Triple> out;
  for (int n = lo; n <= hi; ++n)
    for (int c = 4; c <= n - 1; ++c)
      for (int k = 2; 2 * k <= c; ++k) out.push_back({n, c, k});
  return out;
}

bool invalid_params(const std::function<void()>& action) {
  try {
    action();
  } catch (const Error& e) {
    return e.code() == ErrorCode::kInvalidParams;
  }
  return false;
}

}  // namespace

TEST_CASE("closed forms at reference points", "[extremal]") {
  CHECK(f_s(15, 14, 7, 2) == 77);
  CHECK(f_s(15, 14, 3, 2) == 75);
  CHECK(f_s(10, 6, 2, 3) == 15);
  CHECK(g_s(15, 14, 3, 2) == 73);
  CHECK(g_s(13, 12, 3, 2) == 54);
  CHECK(g_sq(15, 14, 3, 2, 2) == 69);
  CHECK(phi_s(15, 14, 3, 2) == 75);
  CHECK(phi_s(15, 14, 7, 2) == 77);
  CHECK(h_s_bound(15, 14, 3, 2) == 77);
  CHECK(erdos_h(5, 2) == 7);
  CHECK(erdos_h(5, 2) == oracle::choose(4, 2) + 1);
  CHECK(erdos_h(15, 3) == 75);
  CHECK(lambda_s(15, 14, 7, 2) == 70);
  CHECK(lambda_s(15, 14, 7, 2) == g_s(15, 14, 3, 2) - 3);
  CHECK(psi(16, 14, 3) == 73);
}

TEST_CASE("piecewise maximum size", "[extremal]") {
  const PiecewisePhi both = phi_piecewise(13, 3);
  CHECK(both.value == 54);
  REQUIRE(both.extremal.size() == 2);

  const PiecewisePhi f_only = phi_piecewise(15, 3);
  CHECK(f_only.value == 75);
  REQUIRE(f_only.extremal.size() == 1);
  CHECK(f_only.extremal[0].family == Family::kF);

  const PiecewisePhi g_only = phi_piecewise(13, 4);
  CHECK(g_only.value == 55);
  REQUIRE(g_only.extremal.size() == 1);
  CHECK(g_only.extremal[0].family == Family::kG);
  CHECK(g_s(13, 12, 4, 2) == 55);
}

TEST_CASE("parameter validation", "[extremal]") {
  CHECK(invalid_params([] { f_s(10, 6, 4, 2); }));   // c < 2k
  CHECK(invalid_params([] { f_s(6, 6, 2, 2); }));    // c > n-1
  CHECK(invalid_params([] { f_s(10, 6, 1, 2); }));   // 2k < 4
  CHECK(invalid_params([] { build_F(10, 6, 4); }));
  CHECK(invalid_params([] { build_Gq(10, 6, 2, 3); }));  // q > k
  CHECK(invalid_params([] { erdos_h(5, 3); }));
  CHECK(invalid_params([] { erdos_h(5, 0); }));
  CHECK(invalid_params([] { lambda_s(15, 14, 8, 2); }));
  try {
    f_s(10, 6, 4, 2);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("c >= 2k") != std::string::npos);
  }
}

TEST_CASE("named constructions", "[extremal]") {
  CHECK(are_isomorphic(build_F(5, 4, 2), join(complete(2), empty(3))));
  CHECK(are_isomorphic(build_F(5, 4, 2), build_ore_exceptional()));
  const Graph f = build_F(15, 14, 7);
  CHECK(size(f) == 77);
  CHECK(min_degree(f) == 7);
  CHECK(circumference(f) == 14);
  CHECK(size(build_G(13, 12, 3)) == 54);
  CHECK(size(build_Gq(15, 14, 3, 2)) == 69);
  for (int n = 4; n <= 10; ++n) {
    const Graph ore = build_ore_extremal(n);
    CHECK(size(ore) == static_cast<int>(oracle::choose(n - 1, 2)) + 1);
    CHECK_FALSE(is_hamiltonian(ore));
    CHECK(is_traceable(ore));
  }
  const Graph eg = build_erdos_gallai_extremal(13, 5);
  CHECK(size(eg) == 5 * 12 / 2);
  CHECK(oracle::circumference(eg) == 5);
}

TEST_CASE("constructions realize their formulas", "[extremal][property]") {
  for (const auto& [n, c, k] : valid_triples(5, 12)) {
    CAPTURE(n, c, k);
    const int t = c / 2;
    const Graph f = build_F(n, c, k);
    const Graph g = build_G(n, c, k);
    const auto fc = oracle::clique_counts(f);
    const auto gc = oracle::clique_counts(g);
    for (int s = 2; s <= n; ++s) {
      CHECK((s <= static_cast<int>(fc.size()) ? fc[s - 1] : 0) == f_s(n, c, k, s));
      CHECK((s <= static_cast<int>(gc.size()) ? gc[s - 1] : 0) == g_s(n, c, k, s));
    }
    for (const Graph& x : {f, g}) {
      CHECK(x.order() == n);
      CHECK(min_degree(x) == k);
      CHECK(oracle::circumference(x) == c);
      CHECK(oracle::two_connected(x));
    }
    for (int q = 1; q <= k && q <= n - c - 1 + t; ++q) {
      const Graph gq = build_Gq(n, c, k, q);
      const auto qc = oracle::clique_counts(gq);
      for (int s = 2; s <= 4; ++s)
        CHECK((s <= static_cast<int>(qc.size()) ? qc[s - 1] : 0) == g_sq(n, c, k, q, s));
      CHECK(min_degree(gq) == k);
      if (k < t) {
        const auto degrees = degree_sequence(gq);
        CHECK(std::count(degrees.begin(), degrees.end(), k) == q);
      }
      CHECK(oracle::circumference(gq) == c);
      CHECK(oracle::two_connected(gq));
    }
    if (k == t) CHECK(g == f);
    CHECK(build_Gq(n, c, k, 1) == g);
  }
}

TEST_CASE("detour-order constructions", "[extremal][property]") {
  for (int n = 5; n <= 11; ++n)
    for (int k = 1; 2 * k + 1 <= n - 1; ++k)
      for (int p = 2 * k + 1; p <= n - 1; ++p) {
        CAPTURE(n, p, k);
        const Graph fp = build_Fprime(n, p, k);
        CHECK(min_degree(fp) == k);
        CHECK(oracle::detour_order(fp) == p);
        CHECK(oracle::circumference(join(fp, complete(1))) == p + 1);
        if (k >= 2 && p - 1 >= 4) {
          CHECK(size(fp) == static_cast<int>(f_s(n, p - 1, k, 2)));
          const Graph gp = build_Gprime(n, p, k);
          CHECK(min_degree(gp) == k);
          CHECK(oracle::detour_order(gp) == p);
          CHECK(size(gp) == static_cast<int>(g_s(n, p - 1, k, 2)));
          CHECK(psi(n, p, k) == static_cast<Count>(std::max(size(fp), size(gp))));
        }
      }
}

TEST_CASE("formula identities", "[extremal][property]") {
  for (const auto& [n, c, k] : valid_triples(5, 20)) {
    const int t = c / 2;
    for (int s = 2; s <= 5; ++s) {
      CAPTURE(n, c, k, s);
      CHECK(g_s(n, c, t, s) == f_s(n, c, t, s));
      CHECK(g_sq(n, c, k, 1, s) == g_s(n, c, k, s));
      CHECK(phi_s(n, c, k, s) == std::max(f_s(n, c, k, s), g_s(n, c, k, s)));
      CHECK(lambda_s(n, c, t, s) + oracle::choose(k, s - 1) == g_s(n, c, k, s));
      CHECK(h_s_bound(n, c, k, s) >= phi_s(n, c, k, s));
      Count best = 0;
      for (int kk = k; kk <= t; ++kk) best = std::max(best, phi_s(n, c, kk, s));
      CHECK(h_s_bound(n, c, k, s) == best);
    }
  }
}

TEST_CASE("lambda is discretely convex", "[extremal][property]") {
  for (int n = 5; n <= 20; ++n)
    for (int c = 4; c <= n - 1; ++c)
      for (int s = 2; s <= 5; ++s)
        for (int x = 2; x + 2 <= c / 2; ++x) {
          CAPTURE(n, c, s, x);
          const auto l0 = static_cast<long long>(lambda_s(n, c, x, s));
          const auto l1 = static_cast<long long>(lambda_s(n, c, x + 1, s));
          const auto l2 = static_cast<long long>(lambda_s(n, c, x + 2, s));
          CHECK(l2 - l1 >= l1 - l0);
        }
}

TEST_CASE("piecewise form against the family maxima", "[extremal][property]") {
  for (int n = 5; n <= 40; ++n)
    for (int k = 2; 2 * k + 1 <= n; ++k) {
      CAPTURE(n, k);
      const Count g = g_s(n, n - 1, k, 2);
      const long long nn = n;
      const long long closed = n % 2 == 1 ? (3 * nn * nn - 8 * nn + 5) / 8 + k
                                          : (3 * nn * nn - 10 * nn + 16) / 8 + k;
      CHECK(static_cast<long long>(g) == closed);
      const Count f = f_s(n, n - 1, k, 2);
      CHECK(f == oracle::choose(n - k, 2) + static_cast<Count>(k * k));
      const PiecewisePhi phi = phi_piecewise(n, k);
      CHECK(phi.value == std::max(f, g));
      std::vector<Family> families;
      for (const auto& spec : phi.extremal) {
        families.push_back(spec.family);
        CHECK(spec.params.n == n);
        CHECK(spec.params.c == n - 1);
        CHECK(size(build(spec)) == static_cast<int>(phi.value));
      }
      if (f > g) CHECK(families == std::vector<Family>{Family::kF});
      if (g > f) CHECK(families == std::vector<Family>{Family::kG});
      if (f == g && k < (n - 1) / 2) CHECK(families.size() == 2);
    }
}

TEST_CASE("extreme Chvatal sequences are graphical", "[extremal]") {
  for (int n = 5; n <= 16; ++n)
    for (int k = 2; 2 * k + 1 <= n; ++k)
      for (int i = k; 2 * i + 1 <= n; ++i) {
        CAPTURE(n, i, k);
        const auto seq = chvatal_extreme_sequence(n, i, k);
        CHECK(static_cast<int>(seq.size()) == n);
        CHECK(std::is_sorted(seq.begin(), seq.end()));
        CHECK(is_graphical(seq));
      }
}
