#include <benchmark/benchmark.h>

#include <random>

#include "champagne/canonical.hpp"
#include "champagne/catalog.hpp"

namespace {

using champagne::Graph;

Graph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_CanonicalRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Graph> graphs;
  for (std::uint64_t s = 0; s < 64; ++s) graphs.push_back(random_graph(n, s));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(champagne::canonical_code(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalRandom)->DenseRange(6, 16, 2);

// Vertex-transitive graphs are the worst case for the backtracking search.
void BM_CanonicalCycle(benchmark::State& state) {
  const Graph g = champagne::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(champagne::canonical_code(g));
}
BENCHMARK(BM_CanonicalCycle)->DenseRange(5, 16, 1);

void BM_CanonicalBruteForce(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(champagne::canonical_form_brute_force(g));
}
BENCHMARK(BM_CanonicalBruteForce)->DenseRange(5, 8, 1);

}  // namespace
