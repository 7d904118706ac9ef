#include <benchmark/benchmark.h>

#include <cmath>

#include "titeica/surface.hpp"

using namespace titeica;

static void BM_IntegrateSurface(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  const double s3 = std::sqrt(3.0);
  const auto frame = nonruled_frame(Bivariate::constant(1.0));
  const std::array<std::array<double, 3>, 3> ics{{{1, 1, 1}, {1, -0.5, -0.5}, {0, 0.5 * s3, -0.5 * s3}}};
  for (auto _ : state) benchmark::DoNotOptimize(integrate_surface(frame, ics, GridSpec::unit(step)));
  state.SetItemsProcessed(state.iterations() * (state.range(0) + 1) * (state.range(0) + 1));
}
BENCHMARK(BM_IntegrateSurface)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Geometry(benchmark::State& state) {
  const SurfaceGrid g = sample_surface(hyperbolic_surface(1.0), GridSpec::unit(0.02, -0.5, -0.5));
  for (auto _ : state) benchmark::DoNotOptimize(geometry(g));
}
BENCHMARK(BM_Geometry)->Unit(benchmark::kMicrosecond);
