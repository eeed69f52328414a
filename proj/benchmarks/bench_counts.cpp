#include <benchmark/benchmark.h>

#include "tripow/alpha.hpp"
#include "tripow/cubes.hpp"
#include "tripow/oracle.hpp"
#include "tripow/squares.hpp"
#include "tripow/words.hpp"

namespace {

void BM_TriPrefix(benchmark::State& state) {
  const auto n = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tripow::tri_prefix(n));
  }
  state.SetBytesProcessed(state.iterations() * n);
}
BENCHMARK(BM_TriPrefix)->Arg(100000)->Arg(1000000)->Arg(5000000);

void BM_SquareDiffVectorBuild(benchmark::State& state) {
  const auto n = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tripow::square_diff_vector(n));
  }
}
BENCHMARK(BM_SquareDiffVectorBuild)->Arg(100000)->Arg(5000000);

void BM_CubeDiffVectorBuild(benchmark::State& state) {
  const auto n = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tripow::cube_diff_vector(n));
  }
}
BENCHMARK(BM_CubeDiffVectorBuild)->Arg(100000)->Arg(5000000);

void BM_RepeatedSquareQuery(benchmark::State& state) {
  const tripow::DiffVector vec = tripow::square_diff_vector(5000000);
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vec.prefix_sum(n));
    n = n % 5000000 + 977;  // sweep query positions
  }
}
BENCHMARK(BM_RepeatedSquareQuery);

void BM_DistinctSquareCount(benchmark::State& state) {
  std::int64_t n = 8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tripow::distinct_square_count(n));
    n = n % 4000000 + 13;
  }
}
BENCHMARK(BM_DistinctSquareCount);

void BM_OracleScan(benchmark::State& state) {
  const std::string prefix = tripow::tri_prefix(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tripow::oracle::scan_repetitions(prefix));
  }
}
BENCHMARK(BM_OracleScan)->Arg(1000)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_AlphaPositions(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tripow::alpha_power_positions(tripow::Rational(5, 2), state.range(0)));
  }
}
BENCHMARK(BM_AlphaPositions)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
