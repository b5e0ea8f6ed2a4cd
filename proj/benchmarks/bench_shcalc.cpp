#include "shcalc/localization.hpp"
#include "shcalc/pipeline.hpp"

#include <benchmark/benchmark.h>

using namespace shcalc;

static void BM_ComputeShExact(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_sh(m, 2, CoefficientField::Rationals));
}
BENCHMARK(BM_ComputeShExact)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_ComputeShPartial(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_sh(m, m, CoefficientField::Rationals));
}
BENCHMARK(BM_ComputeShPartial)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_CharPoly(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const LambdaMatrix r = build_r_matrix(m, 1, CoefficientField::Rationals);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(r));
}
BENCHMARK(BM_CharPoly)->RangeMultiplier(2)->Range(4, 32);

static void BM_KernelPowers(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const LambdaMatrix r = build_r_matrix(m, 1, CoefficientField::Rationals);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_power_dimensions(r));
}
BENCHMARK(BM_KernelPowers)->RangeMultiplier(2)->Range(4, 16);

static void BM_LocalizeAa(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const WeightVector w = sample_weights(m, 1);
    for (auto _ : state) benchmark::DoNotOptimize(localize_Aa(m, 4, 1, w));
}
BENCHMARK(BM_LocalizeAa)->DenseRange(4, 12, 4);

BENCHMARK_MAIN();
