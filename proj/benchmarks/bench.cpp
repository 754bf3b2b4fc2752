#include <cmath>

#include <benchmark/benchmark.h>

#include "gramcap/gram.hpp"
#include "gramcap/lowerbound.hpp"
#include "gramcap/oracle.hpp"
#include "gramcap/tube.hpp"

using namespace gramcap;

static void BM_CompleteFromTriple(benchmark::State& state) {
  FenchelNielsenTriple fn{4.0, 1.2, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(complete_from_triple(fn));
}
BENCHMARK(BM_CompleteFromTriple);

static void BM_CapacityBounds(benchmark::State& state) {
  QPieceGeometry g;
  g.beta = 4.0;
  g.alpha_i = 2.0;
  g.t_i = 0.1;
  g.hex_i = hexagon_data(4.0, 2.0);
  Annulus tube = build_tube(g, CurveSelector::alpha_i);
  double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(capacity_bounds(tube, tol));
}
BENCHMARK(BM_CapacityBounds)->Arg(6)->Arg(8)->Arg(10);

static void BM_LowerBound(benchmark::State& state) {
  QPieceGeometry g;
  g.beta = 4.0;
  g.alpha_i = 2.0;
  g.t_i = 0.1;
  g.hex_i = hexagon_data(4.0, 2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(lower_bound_qii(g, CurveSelector::alpha_i, 1e-8));
}
BENCHMARK(BM_LowerBound);

static void BM_Assemble(benchmark::State& state) {
  SurfaceSpec spec;
  spec.genus = static_cast<int>(state.range(0));
  for (int i = 0; i < spec.genus; ++i)
    spec.pieces.push_back({{4.0 + 0.1 * i, 1.2 + 0.05 * i, 0.1}, CurveRole::alpha_i});
  for (auto _ : state) benchmark::DoNotOptimize(assemble(spec, 1e-8));
}
BENCHMARK(BM_Assemble)->Arg(2)->Arg(3)->Arg(5);

static void BM_DiscreteCapacity(benchmark::State& state) {
  QPieceGeometry g;
  g.beta = 4.0;
  g.alpha_i = 2.0;
  g.t_i = 0.0;
  g.hex_i = hexagon_data(4.0, 2.0);
  Annulus tube = build_tube(g, CurveSelector::alpha_i);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(discrete_capacity(tube, n, n));
}
BENCHMARK(BM_DiscreteCapacity)->Arg(32)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
