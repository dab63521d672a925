#include <benchmark/benchmark.h>

#include "champagne/catalog.hpp"
#include "champagne/signature.hpp"

namespace {

void BM_SignatureExactCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = champagne::trial_rng(0, 0);
  const auto m = champagne::cycle_pattern_sample(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(champagne::signature_exact(m));
}
BENCHMARK(BM_SignatureExactCycle)->Arg(5)->Arg(7)->Arg(9);

void BM_SignatureExactH7(benchmark::State& state) {
  auto rng = champagne::trial_rng(0, 0);
  const auto m = champagne::h7_pattern_sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(champagne::signature_exact(m));
}
BENCHMARK(BM_SignatureExactH7);

void BM_SignatureFloat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = champagne::trial_rng(0, 0);
  const auto m = champagne::to_float(champagne::cycle_pattern_sample(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(champagne::signature_float(m));
}
BENCHMARK(BM_SignatureFloat)->Arg(5)->Arg(7)->Arg(9);

void BM_DeterminantBareiss(benchmark::State& state) {
  auto rng = champagne::trial_rng(0, 0);
  const auto m = champagne::cycle_pattern_sample(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(champagne::determinant_bareiss(m));
}
BENCHMARK(BM_DeterminantBareiss)->Arg(5)->Arg(9);

}  // namespace
