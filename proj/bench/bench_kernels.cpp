// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "drg/distance_table.hpp"
#include "drg/families.hpp"
#include "drg/generators.hpp"
#include "drg/jacobi.hpp"

namespace {

void BM_DistancesParallel(benchmark::State& state) {
  const auto g = drg::generators::hypercube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(drg::all_pairs_distances(g));
}

void BM_DistancesSerial(benchmark::State& state) {
  const auto g = drg::generators::hypercube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(drg::all_pairs_distances_serial(g));
}

void BM_BisectionParallel(benchmark::State& state) {
  const auto J = drg::truncated_jacobi(drg::tree_sequence(3), static_cast<std::size_t>(state.range(0)));
  const double tol = drg::default_tolerance(J);
  for (auto _ : state) benchmark::DoNotOptimize(drg::eigenvalues(J, tol));
}

void BM_BisectionSerial(benchmark::State& state) {
  const auto J = drg::truncated_jacobi(drg::tree_sequence(3), static_cast<std::size_t>(state.range(0)));
  const double tol = drg::default_tolerance(J);
  for (auto _ : state) benchmark::DoNotOptimize(drg::eigenvalues_serial(J, tol));
}

}  // namespace

BENCHMARK(BM_DistancesParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistancesSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BisectionParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BisectionSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
