#include <benchmark/benchmark.h>

#include "quadcolor/coloring.hpp"
#include "quadcolor/generators.hpp"
#include "quadcolor/map.hpp"
#include "quadcolor/rainbow.hpp"

using namespace quadcolor;

namespace {

void BM_TraceFaces(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto map = torus_grid(n, n).map;
  for (auto _ : state) benchmark::DoNotOptimize(trace_faces(map));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(map.dart_count()));
}
BENCHMARK(BM_TraceFaces)->Arg(8)->Arg(32)->Arg(128);

void BM_CountCube(benchmark::State& state) {
  const auto map = cube();
  for (auto _ : state) benchmark::DoNotOptimize(count_proper_colorings(map));
}
BENCHMARK(BM_CountCube);

void BM_CountTorus3x3(benchmark::State& state) {
  const auto map = torus_grid(3, 3).map;
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_proper_colorings(map, {.threads = threads}));
}
BENCHMARK(BM_CountTorus3x3)->Arg(1)->Arg(4)->UseRealTime();

void BM_Sample(benchmark::State& state) {
  const auto map = random_quadrangulation(cube(), static_cast<std::size_t>(state.range(0)), 1);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_proper_coloring(map, seed++));
}
BENCHMARK(BM_Sample)->Arg(100)->Arg(1000);

void BM_VerifyAllCube(benchmark::State& state) {
  const auto map = cube();
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_colorings(map));
}
BENCHMARK(BM_VerifyAllCube);

void BM_RandomQuadrangulation(benchmark::State& state) {
  const auto base = cube();
  const auto steps = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_quadrangulation(base, steps, seed++));
}
BENCHMARK(BM_RandomQuadrangulation)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
