#include <random>

#include <benchmark/benchmark.h>

#include "boolspec/core.hpp"
#include "boolspec/harness.hpp"

using namespace boolspec;

static BooleanFunction fixed_function(int n) {
    std::mt19937_64 rng(1);
    return random_function(n, rng);
}

static void BM_WhtSerial(benchmark::State& st) {
    auto f = fixed_function(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(wht_serial(f));
}
BENCHMARK(BM_WhtSerial)->DenseRange(14, 22, 4)->Unit(benchmark::kMillisecond);

static void BM_WhtParallel(benchmark::State& st) {
    auto f = fixed_function(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(wht(f));
}
BENCHMARK(BM_WhtParallel)->DenseRange(14, 22, 4)->Unit(benchmark::kMillisecond);

static void BM_ScanN3(benchmark::State& st) {
    const bool parallel = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(scan(3, 0, 1, parallel));
}
BENCHMARK(BM_ScanN3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ScanSampledN5(benchmark::State& st) {
    const bool parallel = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(scan(5, 2000, 1, parallel));
}
BENCHMARK(BM_ScanSampledN5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
