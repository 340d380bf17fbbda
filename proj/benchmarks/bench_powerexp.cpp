#include <benchmark/benchmark.h>

#include "powerexp/audit.hpp"
#include "powerexp/exp_series.hpp"
#include "powerexp/expand.hpp"
#include "powerexp/triangle.hpp"

using namespace powerexp;

static void BM_TriangleRows(benchmark::State& state) {
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(triangle_rows(TriangleKind{}, state.range(0), jobs));
}
BENCHMARK(BM_TriangleRows)->Args({200, 1})->Args({200, 4})->Args({1000, 4})->Unit(benchmark::kMillisecond);

static void BM_Expand(benchmark::State& state) {
  const auto strategies = evaluable_strategies();
  const Strategy s = strategies[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(expand_power(37, 12, s));
  state.SetLabel(s.name());
}
BENCHMARK(BM_Expand)->DenseRange(0, 7);

static void BM_GenBinomialDepth(benchmark::State& state) {
  const Strategy s = Strategy::gen_binomial(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_power(12, 40, s));
}
BENCHMARK(BM_GenBinomialDepth)->DenseRange(1, 9, 2);

static void BM_ExpPartial(benchmark::State& state) {
  const Strategy s = Strategy::parse("telescope-geom");
  for (auto _ : state) benchmark::DoNotOptimize(exp_partial(3, state.range(0), s));
}
BENCHMARK(BM_ExpPartial)->RangeMultiplier(2)->Range(16, 256);

static void BM_AuditAll(benchmark::State& state) {
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(audit_all(jobs));
}
BENCHMARK(BM_AuditAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(3);

BENCHMARK_MAIN();
