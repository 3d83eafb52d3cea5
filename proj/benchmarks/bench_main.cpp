#include <benchmark/benchmark.h>

#include <random>

#include "xcl/canonical.hpp"
#include "xcl/enumerate.hpp"
#include "xcl/extremal.hpp"
#include "xcl/invariants.hpp"

namespace {

xcl::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  xcl::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

void BM_CircumferenceDP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const xcl::Graph g = xcl::build_F(n, n - 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(xcl::circumference(g));
}
BENCHMARK(BM_CircumferenceDP)->DenseRange(10, 20, 5)->Unit(benchmark::kMillisecond);

void BM_CountCliques(benchmark::State& state) {
  const xcl::Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(xcl::count_cliques(g));
}
BENCHMARK(BM_CountCliques)->Arg(16)->Arg(32)->Arg(64);

void BM_CanonicalLabel(benchmark::State& state) {
  const xcl::Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(xcl::canonical_label(g));
}
BENCHMARK(BM_CanonicalLabel)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalLabelRegular(benchmark::State& state) {
  const xcl::Graph g = xcl::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xcl::canonical_label(g));
}
BENCHMARK(BM_CanonicalLabelRegular)->Arg(16)->Arg(32);

void BM_EnumerateNonhamiltonian(benchmark::State& state) {
  xcl::SearchFilter f;
  f.hamiltonian = xcl::Requirement::kForbid;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(xcl::enumerate_all(n, f));
}
BENCHMARK(BM_EnumerateNonhamiltonian)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
