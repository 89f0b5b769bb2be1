// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "rainbow/sampling.hpp"
#include "rainbow/subgraphs.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

EdgeColoredGraph dense_graph(int n) {
  auto rng = make_rng(1, 0);
  return random_colored_graph(rng, n, 0.9, n);
}

void BM_TrianglesSerial(benchmark::State& state) {
  const auto g = dense_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_rainbow_triangles_serial(g));
}

void BM_TrianglesParallel(benchmark::State& state) {
  const auto g = dense_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_rainbow_triangles(g));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_VerifySweep(benchmark::State& state) {
  auto grid = default_grid(TheoremId::T2);
  grid.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(TheoremId::T2, grid).instances);
}

}  // namespace

BENCHMARK(BM_TrianglesSerial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrianglesParallel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
