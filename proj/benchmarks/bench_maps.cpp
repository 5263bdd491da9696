#include <benchmark/benchmark.h>

#include "qschub/maps.hpp"
#include "qschub/verify.hpp"

using namespace qschub;

static void BM_RimHooksClosed(benchmark::State& state) {
    const RectContext ctx(5, 10);
    const Partition nu{8, 7, 5, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(add_rim_hooks_closed(nu, 2, ctx));
}
BENCHMARK(BM_RimHooksClosed);

static void BM_RimHooksDirect(benchmark::State& state) {
    const RectContext ctx(5, 10);
    const Partition nu{8, 7, 5, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(add_rim_hooks_direct(nu, 2, ctx));
}
BENCHMARK(BM_RimHooksDirect);

static void BM_PentagonTuple(benchmark::State& state) {
    const GrIndex x({10, 10, 10, 8, 6}, {9}, {8, 7, 5, 2, 1}, 2, RectContext(5, 10));
    for (auto _ : state) benchmark::DoNotOptimize(pentagon(x));
}
BENCHMARK(BM_PentagonTuple);

static void BM_VerifyPentagon(benchmark::State& state) {
    VerifyOptions opts;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(verify_pentagon(static_cast<int>(state.range(0)), opts));
}
BENCHMARK(BM_VerifyPentagon)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_PetersonLift(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_peterson_lift(6, 12, 6));
}
BENCHMARK(BM_PetersonLift);
