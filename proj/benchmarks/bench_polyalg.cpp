#include <benchmark/benchmark.h>

#include "nestloc/rational.hpp"

using namespace nestloc;

namespace {

LaurentPoly dense_poly(const VarSetPtr& vs, int deg) {
    LaurentPoly p(vs);
    ExpVec e(vs->size(), 0);
    for (int a = -deg; a <= deg; ++a)
        for (int b = -deg; b <= deg; ++b) {
            e[0] = a;
            e[1] = b;
            p.add_term(e, a * 7 + b * 3 + 1);
        }
    return p;
}

} // namespace

static void BM_LaurentMultiply(benchmark::State& state) {
    auto vs = vars::qt();
    auto a = dense_poly(vs, static_cast<int>(state.range(0)));
    auto b = dense_poly(vs, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMultiply)->Arg(4)->Arg(8);

static void BM_ExactDivision(benchmark::State& state) {
    auto vs = vars::qt();
    auto one = LaurentPoly::one(vs);
    auto q = LaurentPoly::var(vs, "q");
    auto t = LaurentPoly::var(vs, "t");
    auto g = (one - q * t).pow(3);
    auto f = dense_poly(vs, 5) * g;
    for (auto _ : state)
        benchmark::DoNotOptimize(f.divide_exact(g));
}
BENCHMARK(BM_ExactDivision);
