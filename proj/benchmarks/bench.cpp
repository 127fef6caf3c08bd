#include <benchmark/benchmark.h>
#include <residua/partitions.hpp>

static void BM_PartitionsOf(benchmark::State& state) {
    for (auto _ : state) {
        auto v = residua::partitions_of(state.range(0));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_PartitionsOf)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
