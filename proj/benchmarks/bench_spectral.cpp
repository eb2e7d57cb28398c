#include <benchmark/benchmark.h>

#include "bottle/spectral.hpp"

using namespace bottle;
using namespace bottle::spectral;

static void BM_ModeAssembly(benchmark::State& state)
{
    const auto f = RadialField::make(RadialProfile::constant(1.0), 1.0, 1.0);
    const auto v0 = RadialPotential::zero();
    const RadialGrid grid(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_mode_system(f, v0, 3, grid));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ModeAssembly)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity();

static void BM_InertiaCount(benchmark::State& state)
{
    const auto f = RadialField::make(RadialProfile::constant(1.0), 1.0, 1.0);
    const auto v0 = RadialPotential::zero();
    const RadialGrid grid(static_cast<int>(state.range(0)));
    const auto sys = build_mode_system(f, v0, 3, grid);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_negative_inertia(sys, 50.0));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InertiaCount)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity();

static void BM_CountEigenvalues(benchmark::State& state)
{
    const auto f = RadialField::make(RadialProfile::constant(1.0), 1.0, 1.0);
    const RadialGrid grid(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_eigenvalues(f, 50.0, grid).total);
}
BENCHMARK(BM_CountEigenvalues)->Arg(4000)->Arg(20000)->Unit(benchmark::kMillisecond);
