#include <random>

#include <benchmark/benchmark.h>

#include "behrend/hilb.hpp"
#include "behrend/linalg.hpp"

using namespace behrend;

namespace {

DenseMatrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<int> d(-9, 9);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_rank_serial(benchmark::State& state) {
  auto m = random_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_serial(m, 32003));
}

void BM_rank_parallel(benchmark::State& state) {
  auto m = random_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_parallel(m, 32003));
}

void BM_parity_scan_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parity_scan_serial(state.range(0)));
}

void BM_parity_scan_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parity_scan_parallel(state.range(0)));
}

}  // namespace

BENCHMARK(BM_rank_serial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_parallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_parity_scan_serial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parity_scan_parallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
