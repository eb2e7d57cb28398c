#include <benchmark/benchmark.h>

#include "bottle/field.hpp"

using namespace bottle;

static void BM_FieldConstruction(benchmark::State& state)
{
    for (auto _ : state) {
        auto f = RadialField::make(RadialProfile::constant(1.0), 1.0, 1.0);
        benchmark::DoNotOptimize(f.flux_norm());
    }
}
BENCHMARK(BM_FieldConstruction)->Unit(benchmark::kMillisecond);

static void BM_FluxTableLookup(benchmark::State& state)
{
    const auto f = RadialField::make(RadialProfile::constant(1.0), 1.0, 1.0);
    double r = 0.0;
    for (auto _ : state) {
        r += 1e-6;
        if (r >= 0.999) r = 1e-6;
        benchmark::DoNotOptimize(f.flux_interpolated(r));
    }
}
BENCHMARK(BM_FluxTableLookup);

static void BM_FluxClosedForm(benchmark::State& state)
{
    const auto f = RadialField::make(RadialProfile::constant(1.0), 1.0, 1.0);
    double r = 0.0;
    for (auto _ : state) {
        r += 1e-6;
        if (r >= 0.999) r = 1e-6;
        benchmark::DoNotOptimize(f.flux(r));
    }
}
BENCHMARK(BM_FluxClosedForm);
