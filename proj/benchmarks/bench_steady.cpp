#include <benchmark/benchmark.h>

#include "floq/dissipation.hpp"

static void bm_steady_row(benchmark::State& state) {
    floq::DriveParams p;
    p.omega0 = 0.19;
    p.form = floq::DriveForm::CosineY;
    floq::BathParams bath;
    for (auto _ : state) {
        floq::FloquetSolution sol = floq::floquet_diagonalize(p);
        floq::SteadyState ss = floq::steady_state(sol, p, bath);
        benchmark::DoNotOptimize(ss);
    }
}
BENCHMARK(bm_steady_row);

static void bm_sigma_z_fourier(benchmark::State& state) {
    floq::DriveParams p;
    p.omega0 = 0.19;
    floq::FloquetSolution sol = floq::floquet_diagonalize(p);
    for (auto _ : state) {
        auto f = floq::sigma_z_fourier(sol, 64);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(bm_sigma_z_fourier);
