#include <esetlab/cartan.hpp>
#include <esetlab/rng.hpp>

#include <benchmark/benchmark.h>

using namespace esetlab;

static void BM_cartan_discs(benchmark::State& state) {
    std::mt19937_64 eng(23);
    std::vector<Complex> points(static_cast<std::size_t>(state.range(0)));
    for (Complex& p : points)
        p = Complex(uniform_in(eng, -5.0, 5.0), uniform_in(eng, -5.0, 5.0));
    for (auto _ : state) benchmark::DoNotOptimize(cartan_discs(points, 0.75).size());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_cartan_discs)->Arg(10)->Arg(25)->Arg(50)->Arg(100);
