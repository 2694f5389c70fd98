#include <benchmark/benchmark.h>

#include "cubiclass/bqf.hpp"

using namespace cubiclass;

static void BM_ComposeReduceDefinite(benchmark::State& state)
{
    bqf f{2, 1, 3}; /* disc -23 */
    for (auto _ : state) {
        bqf g = reduce_definite(compose_raw(f, f));
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_ComposeReduceDefinite);

BENCHMARK_MAIN();
