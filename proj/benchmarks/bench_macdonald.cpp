#include <benchmark/benchmark.h>

#include "nestloc/symfunc.hpp"

using namespace nestloc;

static void BM_MacdonaldFillings(benchmark::State& state) {
    Partition mu({3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(modified_macdonald(mu, 6));
}
BENCHMARK(BM_MacdonaldFillings);

static void BM_KostkaRow(benchmark::State& state) {
    Partition mu({3, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(modified_kostka_row(mu));
}
BENCHMARK(BM_KostkaRow);

BENCHMARK_MAIN();
