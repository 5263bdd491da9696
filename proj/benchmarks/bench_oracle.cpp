#include <benchmark/benchmark.h>

#include "qschub/oracle/lr.hpp"
#include "qschub/oracle/quantum_fl.hpp"
#include "qschub/oracle/quantum_gr.hpp"

using namespace qschub;

static void BM_ClassicalLR(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(classical_lr({4, 3, 2, 1}, {3, 2, 1}, {5, 4, 3, 2, 1, 1}));
}
BENCHMARK(BM_ClassicalLR);

static void BM_RimHookReduction(benchmark::State& state) {
    const RectContext ctx(4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_rim_hooks({9, 7, 4, 2}, ctx));
}
BENCHMARK(BM_RimHookReduction);

// Iterated Pieri has no cache, so every iteration does the full work.
static void BM_PieriProduct(benchmark::State& state) {
    const RectContext ctx(3, 4);
    for (auto _ : state) benchmark::DoNotOptimize(quantum_product_pieri({4, 3, 1}, {3, 2, 2}, ctx));
}
BENCHMARK(BM_PieriProduct);

static void BM_QuantumMonk(benchmark::State& state) {
    const Permutation w{3, 6, 1, 5, 2, 4};
    for (auto _ : state) benchmark::DoNotOptimize(quantum_monk_fl(3, w));
}
BENCHMARK(BM_QuantumMonk);

static void BM_ClassicalFlagProduct(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classical_product_fl({2, 4, 1, 3, 5}, {3, 1, 5, 2, 4}));
}
BENCHMARK(BM_ClassicalFlagProduct)->Unit(benchmark::kMicrosecond);
