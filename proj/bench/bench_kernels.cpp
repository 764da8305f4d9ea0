#include <benchmark/benchmark.h>

#include "cobk/batch.hpp"
#include "cobk/mirror.hpp"

namespace {

bool accept_all(const std::int64_t*, std::size_t, std::size_t, const std::int64_t*) { return true; }

void BM_SnfSweep(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = cobk::snf_sweep(2, 3, 3, accept_all, true, parallel);
    benchmark::DoNotOptimize(r.matrices);
  }
}
BENCHMARK(BM_SnfSweep)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_RoitmanTrials(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = cobk::roitman_trials(11, 64, parallel);
    benchmark::DoNotOptimize(r.data());
  }
}
BENCHMARK(BM_RoitmanTrials)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_NormalForms(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  cobk::Coefficients g(cobk::FGAbelianGroup(1, {cobk::Integer(2)}));
  auto sums = cobk::random_combinations(g, 200, 5);
  for (auto _ : state) {
    auto r = cobk::normal_forms(sums, g, parallel);
    benchmark::DoNotOptimize(r.data());
  }
}
BENCHMARK(BM_NormalForms)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
