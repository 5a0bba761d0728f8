#include <benchmark/benchmark.h>

#include "gerst/enumerate.hpp"
#include "gerst/floorplan.hpp"
#include "gerst/oracle.hpp"
#include "gerst/search.hpp"

using namespace gerst;

namespace {

GluingData two_variable_gluing() {
  const Generators i{{4, 0}, {3, 1}, {2, 2}, {0, 4}};
  const Generators j{{4, 0}, {3, 1}, {1, 3}, {0, 4}};
  const Generators k{{3, 0}, {2, 1}, {1, 2}, {0, 3}};
  const auto isos = enumerate_monomial_isos(quotient_cells(2, i, k), quotient_cells(2, j, k));
  return gluing_from_ideals(2, i, j, k, k, isos.front());
}

// A staircase of single cells: every pair is comparable, so the chain DP
// sees a dense DAG.
FloorPlan diagonal(int n) {
  FloorPlan p;
  for (int j = 0; j < n; ++j) {
    p.nu.push_back(SkewShape(3, {Point{0, 0, 0}}));
    p.b.push_back(Point{j, j});
    p.c.push_back(Point{j, j});
  }
  return p;
}

}  // namespace

static void BM_EnumerateShapes3D(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected_shapes(3, k));
}
BENCHMARK(BM_EnumerateShapes3D)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_AlgebraDimensionMatrices(benchmark::State& state) {
  const auto mats = module_to_matrices(two_variable_gluing());
  for (auto _ : state) benchmark::DoNotOptimize(algebra_dimension(mats));
}
BENCHMARK(BM_AlgebraDimensionMatrices)->Unit(benchmark::kMicrosecond);

static void BM_AlgebraDimensionAction(benchmark::State& state) {
  const auto act = module_action(two_variable_gluing());
  for (auto _ : state) benchmark::DoNotOptimize(algebra_dimension(act));
}
BENCHMARK(BM_AlgebraDimensionAction)->Unit(benchmark::kMicrosecond);

static void BM_ChainHeights(benchmark::State& state) {
  const auto p = diagonal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hb_all(p));
}
BENCHMARK(BM_ChainHeights)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

static void BM_SmallIntersectionSearch(benchmark::State& state) {
  const int box = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_small_intersection(2, 5, box, box));
}
BENCHMARK(BM_SmallIntersectionSearch)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
