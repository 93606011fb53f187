// Serial reference vs OpenMP sweep over the symmetric 60x60 grid.

#include <benchmark/benchmark.h>

#include "drivedamp/model.hpp"
#include "drivedamp/sweep.hpp"

namespace {

drivedamp::SweepSpec symmetric_grid(int n) {
    drivedamp::SweepSpec s;
    s.base.omega_b = 1.0;
    s.base.kappa = drivedamp::kappa_from_ratio(1.0, 1.0, 10.0, 0.1);
    s.zeta1_grid = drivedamp::logspace(1e-4, 5e-2, n);
    s.zeta2_grid = s.zeta1_grid;
    return s;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto spec = symmetric_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(drivedamp::run_sweep_serial(spec));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_SweepOpenMP(benchmark::State& state) {
    const auto spec = symmetric_grid(static_cast<int>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(drivedamp::run_sweep(spec, threads));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOpenMP)->Args({60, 1})->Args({60, 2})->Args({60, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
