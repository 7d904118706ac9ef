#include <benchmark/benchmark.h>

#include "titeica/jets.hpp"
#include "titeica/pde.hpp"
#include "titeica/sampling.hpp"

using namespace titeica;

static void BM_JetMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  JetSampler gen(1);
  const Jet2 a = gen.jet(order), b = sin(a) + 0.5 * a;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_JetMultiply)->DenseRange(1, 3);

static void BM_JetExpLog(benchmark::State& state) {
  JetSampler gen(2);
  const Jet2 a = gen.positive_jet(3);
  for (auto _ : state) benchmark::DoNotOptimize(exp(log(a)));
}
BENCHMARK(BM_JetExpLog);

static void BM_TiteicaResidual(benchmark::State& state) {
  JetSampler gen(3);
  const Jet2 w = gen.jet(2);
  const PdeKind k = PdeKind::titeica_omega();
  for (auto _ : state) benchmark::DoNotOptimize(residual_scalar(k, w));
}
BENCHMARK(BM_TiteicaResidual);
