#include <benchmark/benchmark.h>

#include <numbers>

#include "baf/builders.hpp"
#include "baf/flip_graph.hpp"
#include "baf/flips.hpp"
#include "baf/geodesics.hpp"

using namespace baf;
namespace {
constexpr double kPi = std::numbers::pi;
}

static void BM_Flip(benchmark::State& state) {
  Surface s = build_two_cylinder_fixture();
  HalfEdgeRef e = s.interior_edges().front();
  for (auto _ : state) benchmark::DoNotOptimize(flip(s, e).surface.num_triangles());
}
BENCHMARK(BM_Flip);

static void BM_CanonicalKey(benchmark::State& state) {
  Surface s = build_two_cylinder_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(s).size());
}
BENCHMARK(BM_CanonicalKey);

static void BM_ExploreFlipGraph(benchmark::State& state) {
  Surface s = build_dilation_torus(kPi / 3, 2.0);
  ExploreOptions opt{static_cast<int>(state.range(0)), 1000, -1.0, false};
  for (auto _ : state) benchmark::DoNotOptimize(explore_flip_graph(s, opt).nodes.size());
}
BENCHMARK(BM_ExploreFlipGraph)->Arg(50)->Arg(200);

static void BM_Trace(benchmark::State& state) {
  Surface s = build_dilation_torus(kPi / 3, 2.0);
  cpx at = (s.triangle(0)[0] + s.triangle(0)[1] + s.triangle(0)[2]) / 3.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(trace(s, 0, at, std::polar(1.0, 0.9),
                                   static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_Trace)->Arg(100)->Arg(1000);

static void BM_SaddleConnections(benchmark::State& state) {
  Surface s = build_square_torus();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_saddle_connections(s, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_SaddleConnections)->Arg(4)->Arg(8);

static void BM_DetectCylinders(benchmark::State& state) {
  Surface s = build_two_cylinder_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(detect_cylinders(s, 8).size());
}
BENCHMARK(BM_DetectCylinders);

BENCHMARK_MAIN();
