#include <benchmark/benchmark.h>

#include "floq/dynamics.hpp"
#include "floq/ladder.hpp"

static void bm_ladder_evolve(benchmark::State& state) {
    floq::DriveParams p;
    p.omega0 = 0.19;
    int w = static_cast<int>(state.range(0));
    for (auto _ : state) {
        floq::LadderEvolution ev = floq::evolve_ladder(p, 5, w, 16);
        benchmark::DoNotOptimize(ev);
    }
}
BENCHMARK(bm_ladder_evolve)->Arg(32)->Arg(64);

static void bm_llg_period(benchmark::State& state) {
    floq::DriveParams p;
    p.omega0 = 0.19;
    p.form = floq::DriveForm::CosineY;
    auto m0 = floq::aligned_moment(p);
    for (auto _ : state) {
        floq::ClassicalTrajectory tr = floq::classical_llg(p, m0, 0.01, 1, 4096, 64);
        benchmark::DoNotOptimize(tr);
    }
}
BENCHMARK(bm_llg_period);
