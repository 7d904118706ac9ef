#include <benchmark/benchmark.h>

#include "titeica/pde.hpp"
#include "titeica/sampling.hpp"
#include "titeica/symmetry.hpp"
#include "titeica/variational.hpp"

using namespace titeica;

static void BM_Prolong2(benchmark::State& state) {
  JetSampler gen(4);
  const Jet2 w = gen.jet(3);
  const auto X = liouville_symmetry(Curve::from_expr([](const Jet1& t) { return sin(t); }),
                             Curve::from_expr([](const Jet1& t) { return t * t; }));
  for (auto _ : state) benchmark::DoNotOptimize(prolong2(X, w));
}
BENCHMARK(BM_Prolong2);

static void BM_InvarianceDefectTiteica(benchmark::State& state) {
  JetSampler gen(5);
  const Jet2 w = gen.jet(3);
  const auto U = titeica_symmetries();
  const PdeKind k = PdeKind::titeica_omega();
  for (auto _ : state)
    for (const auto& X : U) benchmark::DoNotOptimize(prolonged_equation(X, k, w));
}
BENCHMARK(BM_InvarianceDefectTiteica);

static void BM_Adjoint(benchmark::State& state) {
  const LieBasis B(titeica_symmetries());
  for (auto _ : state) benchmark::DoNotOptimize(adjoint(B, 0, 1.0, 1));
}
BENCHMARK(BM_Adjoint);

static void BM_ConservationDefect(benchmark::State& state) {
  JetSampler gen(6);
  const Jet2 w = gen.jet(2);
  const ConservationLaw law = conservation_table("-U1");
  for (auto _ : state) benchmark::DoNotOptimize(conservation_divergence_defect(law, law.kind, w));
}
BENCHMARK(BM_ConservationDefect);
