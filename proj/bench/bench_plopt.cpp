#include <benchmark/benchmark.h>

#include <omp.h>

#include "taut/pl_opt.hpp"

namespace {

const char* const kPresets[] = {"lemma_b4", "lemma_coh4", "lemma_b5circ", "lemma_coh5"};

void BM_Serial(benchmark::State& state) {
  const auto p = taut::preset(kPresets[state.range(0)]);
  state.SetLabel(kPresets[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(taut::solve_serial(p));
}

void BM_Parallel(benchmark::State& state) {
  const auto p = taut::preset(kPresets[state.range(0)]);
  state.SetLabel(std::string(kPresets[state.range(0)]) + " threads=" + std::to_string(omp_get_max_threads()));
  for (auto _ : state) benchmark::DoNotOptimize(taut::solve(p));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
