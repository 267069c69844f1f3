#include <esetlab/interval_union.hpp>
#include <esetlab/rng.hpp>

#include <benchmark/benchmark.h>

using namespace esetlab;

static void BM_interval_insert(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        std::mt19937_64 eng(42);
        IntervalUnion u;
        for (long i = 0; i < n; ++i) {
            const double a = uniform_in(eng, 0.0, 1000.0);
            u.insert(a, a + uniform_in(eng, 0.01, 5.0));
        }
        benchmark::DoNotOptimize(u.measure());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_interval_insert)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_interval_clip(benchmark::State& state) {
    std::mt19937_64 eng(42);
    IntervalUnion u;
    for (long i = 0; i < 5000; ++i) {
        const double a = uniform_in(eng, 0.0, 1000.0);
        u.insert(a, a + uniform_in(eng, 0.01, 0.5));
    }
    for (auto _ : state) benchmark::DoNotOptimize(u.clipped(300.0, 700.0).measure());
}
BENCHMARK(BM_interval_clip);
