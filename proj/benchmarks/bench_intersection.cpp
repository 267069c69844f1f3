#include <esetlab/curve_family.hpp>
#include <esetlab/disc_collection.hpp>
#include <esetlab/measure_lab.hpp>

#include <benchmark/benchmark.h>

using namespace esetlab;

namespace {

DiscCollection bench_collection(int count) {
    RandomSetParams params;
    params.gauge = Gauge::plane_power(0.5);
    params.count = count;
    params.epsilon = 1e-3;
    params.seed = 7;
    return gen_random(params);
}

}  // namespace

static void BM_meets_batch(benchmark::State& state) {
    const DiscCollection col = bench_collection(static_cast<int>(state.range(0)));
    const CurveFamily fam{col.gauge, 0.0, Complex(1.0, 0.0), 1.5, Branch::Upper};
    for (auto _ : state) {
        long hits = 0;
        for (const Disc& d : col.discs) hits += meets(fam, d).hit() ? 1 : 0;
        benchmark::DoNotOptimize(hits);
    }
    state.SetItemsProcessed(state.iterations() * col.discs.size());
}
BENCHMARK(BM_meets_batch)->Arg(100)->Arg(500);

static void BM_c_interval_batch(benchmark::State& state) {
    const DiscCollection col = bench_collection(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        double total = 0.0;
        for (const Disc& d : col.discs) total += c_interval(col.gauge, 0.0, d).width;
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * col.discs.size());
}
BENCHMARK(BM_c_interval_batch)->Arg(100)->Arg(500);

static void BM_monte_carlo(benchmark::State& state) {
    const DiscCollection col = bench_collection(500);
    for (auto _ : state) {
        const HitReport rep =
            monte_carlo_hits(col.gauge, 0.0, col, 0.1, 10.0, state.range(0), 11);
        benchmark::DoNotOptimize(rep.hits);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_monte_carlo)->Arg(1000)->Arg(10000);
