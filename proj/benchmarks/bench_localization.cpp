#include <benchmark/benchmark.h>

#include "nestloc/invariants.hpp"

using namespace nestloc;

static void BM_FixedPointWeight(benchmark::State& state) {
    Profile p{6, {3, 1}};
    std::vector<ColoredNestedChain> chains;
    for_each_colored_chain(1, p, [&](const ColoredNestedChain& c) { chains.push_back(c); });
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fixed_point_term(chains[i % chains.size()], 1, Flavor::ChiY));
        ++i;
    }
}
BENCHMARK(BM_FixedPointWeight);

static void BM_ChiY(benchmark::State& state) {
    Profile p{static_cast<int>(state.range(0)), {2}};
    for (auto _ : state) {
        ChiOptions o;
        o.flavor = Flavor::ChiY;
        benchmark::DoNotOptimize(chi_vir(1, p, o));
    }
}
BENCHMARK(BM_ChiY)->Arg(4)->Arg(5);

static void BM_InnerSum(benchmark::State& state) {
    Partition mu0({4, 2});
    Profile p{6, {4, 2}};
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_P(mu0, p));
}
BENCHMARK(BM_InnerSum);
