#include <benchmark/benchmark.h>

#include "bottle/specfun.hpp"

using namespace bottle;

static void BM_BesselI0(benchmark::State& state)
{
    const double x = state.range(0) / 10.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(specfun::bessel_i0(x));
}
BENCHMARK(BM_BesselI0)->Arg(5)->Arg(30)->Arg(120)->Arg(400);

static void BM_BesselK0(benchmark::State& state)
{
    const double x = state.range(0) / 10.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(specfun::bessel_k0(x));
}
BENCHMARK(BM_BesselK0)->Arg(5)->Arg(30)->Arg(120)->Arg(400);

static void BM_LogDefect(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(specfun::i0k0_log_defect(0.5));
}
BENCHMARK(BM_LogDefect);
