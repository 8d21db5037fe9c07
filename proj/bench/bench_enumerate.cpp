#include <benchmark/benchmark.h>

#include "kodsum/enumerate.hpp"

using namespace kodsum;

namespace {

void BM_table_parallel(benchmark::State& st) {
    const ComplementKind j(0), k(1);
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_table(j, k, st.range(0)));
}

void BM_table_serial(benchmark::State& st) {
    const ComplementKind j(0), k(1);
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_table_serial(j, k, st.range(0)));
}

void BM_sweep_parallel(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(cross_oracle_sweep(st.range(0)));
}

void BM_sweep_serial(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(cross_oracle_sweep_serial(st.range(0)));
}

} // namespace

BENCHMARK(BM_table_parallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table_serial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
