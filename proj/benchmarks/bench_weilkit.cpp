#include <benchmark/benchmark.h>

#include "weilkit/classify.hpp"
#include "weilkit/density.hpp"
#include "weilkit/factor.hpp"
#include "weilkit/lattice.hpp"

using namespace weilkit;

static void BM_SaturatedLattices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(saturated_cyclic_sublattices(n));
}
BENCHMARK(BM_SaturatedLattices)->DenseRange(1, 8);

static void BM_BruteForceLattices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_lattices(n));
}
BENCHMARK(BM_BruteForceLattices)->DenseRange(1, 8);

static void BM_SlopeAssignmentZero(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto kernel = kernel_lattice(n, KernelTag::Zero);
  for (auto _ : state) benchmark::DoNotOptimize(slope_assignment(kernel, n));
}
BENCHMARK(BM_SlopeAssignmentZero)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTable5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_table(5));
}
BENCHMARK(BM_EnumerateTable5)->Unit(benchmark::kMillisecond);

static void BM_Simulate(benchmark::State& state) {
  PermGens cycle{{1, 2, 3, 4, 0}};
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(5, cycle, 20, trials, 1, {1, {}}));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(trials));
}
BENCHMARK(BM_Simulate)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_FactorCyclotomicProduct(benchmark::State& state) {
  IntPoly f = cyclotomic(5) * cyclotomic(7) * cyclotomic(12) * IntPoly{3, -1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_integers(f));
}
BENCHMARK(BM_FactorCyclotomicProduct)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
