#include <benchmark/benchmark.h>

#include "wtrunc/characters.hpp"
#include "wtrunc/curves.hpp"
#include "wtrunc/intersect.hpp"
#include "wtrunc/resultant.hpp"

using namespace wtrunc;

static void BM_DCurveConstruction(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto c = curves::d_curve(n);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_DCurveConstruction)->Arg(2)->Arg(6);

static void BM_Implicitize(benchmark::State& state) {
    auto curve = curves::d_curve(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto f = curves::implicitize(curve);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_Implicitize)->Arg(1)->Arg(3);

static void BM_ClassifySelf(benchmark::State& state) {
    for (auto _ : state) {
        auto recs = intersect::classify_self(static_cast<int>(state.range(0)),
                                             static_cast<int>(state.range(1)));
        benchmark::DoNotOptimize(recs);
    }
}
BENCHMARK(BM_ClassifySelf)->Args({2, 1})->Args({5, 4});

static void BM_OrbifoldCharacter(benchmark::State& state) {
    for (auto _ : state) {
        auto s = chars::orbifold_character(static_cast<int>(state.range(0)), 13);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_OrbifoldCharacter)->Arg(2)->Arg(3);

static void BM_BruteForceDim(benchmark::State& state) {
    for (auto _ : state) {
        int d = chars::brute_force_dim(2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_BruteForceDim)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
