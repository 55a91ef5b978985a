#include <benchmark/benchmark.h>

#include "floq/propagator.hpp"

static void bm_monodromy(benchmark::State& state) {
    floq::DriveParams p;
    p.omega0 = 0.19;
    int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        floq::Mat2 u = floq::monodromy(p, steps);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(bm_monodromy)->Arg(1024)->Arg(4096)->Arg(16384);

static void bm_sample_period(benchmark::State& state) {
    floq::DriveParams p;
    p.omega0 = 0.19;
    for (auto _ : state) {
        auto us = floq::sample_period(p, 4096, 512);
        benchmark::DoNotOptimize(us);
    }
}
BENCHMARK(bm_sample_period);

BENCHMARK_MAIN();
