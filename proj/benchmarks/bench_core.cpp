#include <benchmark/benchmark.h>

#include "orthoplex/centers.hpp"
#include "orthoplex/families.hpp"
#include "orthoplex/orthocentric.hpp"
#include "orthoplex/verify.hpp"

using namespace orthoplex;

static void BM_Construct(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const OrthoParams p = sample_params(d, OrthoClass::acute, 1);
  for (auto _ : state) benchmark::DoNotOptimize(construct(p.bary, 1.0));
}
BENCHMARK(BM_Construct)->DenseRange(2, 10, 4);

static void BM_ParamsOf(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Simplex s = construct(sample_params(d, OrthoClass::obtuse, 2).bary, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(params_of(s));
}
BENCHMARK(BM_ParamsOf)->DenseRange(2, 10, 4);

static void BM_CenterReport(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Simplex s = construct(sample_params(d, OrthoClass::acute, 3).bary, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(center_report(s));
}
BENCHMARK(BM_CenterReport)->DenseRange(2, 10, 4);

static void BM_GramEmbed(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Simplex s = regular(d, 1.0);
  const SymMatrix g = gram(s, s.vertex(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_embed(g, TolerancePolicy{}));
}
BENCHMARK(BM_GramEmbed)->DenseRange(2, 10, 4);

static void BM_EulerSuite(benchmark::State& state) {
  SuiteConfig c;
  c.samples = 50;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("euler", c));
}
BENCHMARK(BM_EulerSuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
