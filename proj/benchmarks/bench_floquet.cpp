#include <benchmark/benchmark.h>

#include "floq/floquet.hpp"

static void bm_floquet_diagonalize(benchmark::State& state) {
    floq::DriveParams p;
    p.omega0 = 0.19;
    for (auto _ : state) {
        floq::FloquetSolution sol = floq::floquet_diagonalize(p);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(bm_floquet_diagonalize);

static void bm_shirley(benchmark::State& state) {
    floq::DriveParams p;
    p.omega0 = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) {
        floq::ShirleyResult r = floq::shirley_quasienergies(p);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_shirley)->Arg(19)->Arg(50);

static void bm_adiabatic_mu(benchmark::State& state) {
    floq::DriveParams p;
    p.omega0 = 0.19;
    for (auto _ : state) benchmark::DoNotOptimize(floq::adiabatic_mu(p));
}
BENCHMARK(bm_adiabatic_mu);
