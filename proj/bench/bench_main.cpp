// Serial vs OpenMP kernels, and the direct loops vs the O(log X) paths.

#include <benchmark/benchmark.h>

#include "thuemorse/correlation.hpp"
#include "thuemorse/counting.hpp"
#include "thuemorse/expsum.hpp"
#include "thuemorse/kernels.hpp"

using namespace thuemorse;

namespace {

void BM_CorrelationSerial(benchmark::State& state) {
  const auto X = static_cast<Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::correlation(5, 3, X));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CorrelationParallel(benchmark::State& state) {
  const auto X = static_cast<Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::correlation(5, 3, X));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassPairsSerial(benchmark::State& state) {
  const auto X = static_cast<Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::class_pairs(3, 1, X));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassPairsParallel(benchmark::State& state) {
  const auto X = static_cast<Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::class_pairs(3, 1, X));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PhaseModuliSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::phase_moduli(Natural{1} << 30, state.range(0)));
}

void BM_PhaseModuliParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::phase_moduli(Natural{1} << 30, state.range(0)));
}

void BM_CorrNaive(benchmark::State& state) {
  const auto X = static_cast<Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(corr_naive(5, 3, X));
}

void BM_CorrFast(benchmark::State& state) {
  const auto X = static_cast<Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(corr_fast(5, 3, X));
}

void BM_CountFast(benchmark::State& state) {
  const auto X = static_cast<Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_classes_fast(5, 3, X));
}

void BM_ExpsumNaive(benchmark::State& state) {
  const auto X = static_cast<Natural>(state.range(0));
  const RationalPhase third(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(expsum_naive(third, X));
}

void BM_ExpsumFast(benchmark::State& state) {
  const auto X = static_cast<Natural>(state.range(0));
  const RationalPhase third(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(expsum_fast(third, X));
}

}  // namespace

BENCHMARK(BM_CorrelationSerial)->RangeMultiplier(16)->Range(1 << 12, 1 << 24);
BENCHMARK(BM_CorrelationParallel)->RangeMultiplier(16)->Range(1 << 12, 1 << 24)->UseRealTime();
BENCHMARK(BM_ClassPairsSerial)->RangeMultiplier(16)->Range(1 << 12, 1 << 24);
BENCHMARK(BM_ClassPairsParallel)->RangeMultiplier(16)->Range(1 << 12, 1 << 24)->UseRealTime();
BENCHMARK(BM_PhaseModuliSerial)->Arg(1025)->Arg(16385);
BENCHMARK(BM_PhaseModuliParallel)->Arg(1025)->Arg(16385)->UseRealTime();
BENCHMARK(BM_CorrNaive)->RangeMultiplier(16)->Range(1 << 12, 1 << 24);
BENCHMARK(BM_CorrFast)->RangeMultiplier(16)->Range(1 << 12, 1 << 24)->Arg(int64_t{1} << 40)->Arg(int64_t{1} << 62);
BENCHMARK(BM_CountFast)->Arg(int64_t{1} << 40)->Arg(int64_t{1} << 62);
BENCHMARK(BM_ExpsumNaive)->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_ExpsumFast)->RangeMultiplier(16)->Range(1 << 12, 1 << 20)->Arg(int64_t{1} << 62);
BENCHMARK_MAIN();
