#include <benchmark/benchmark.h>

#include "loopwork/enumerate.hpp"
#include "loopwork/isotopy.hpp"
#include "loopwork/osborn.hpp"

using namespace loopwork;

namespace {

void BM_EnumerateOrder5(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(count_loops(5));
}
BENCHMARK(BM_EnumerateOrder5);

void BM_EnumerateOrder6(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(count_loops(6));
}
BENCHMARK(BM_EnumerateOrder6)->Unit(benchmark::kMillisecond);

void BM_AutotopismsS3(benchmark::State& state) {
    const Loop& s3 = builtin_loop("S3");
    for (auto _ : state)
        benchmark::DoNotOptimize(autotopisms(s3));
}
BENCHMARK(BM_AutotopismsS3)->Unit(benchmark::kMillisecond);

void BM_OsbornM12(benchmark::State& state) {
    const Loop& m12 = builtin_loop("M(S3,2)");
    for (auto _ : state)
        benchmark::DoNotOptimize(is_osborn(m12));
}
BENCHMARK(BM_OsbornM12);

void BM_UniversalOsbornM12(benchmark::State& state) {
    const Loop& m12 = builtin_loop("M(S3,2)");
    for (auto _ : state)
        benchmark::DoNotOptimize(is_universal_osborn(m12));
}
BENCHMARK(BM_UniversalOsbornM12)->Unit(benchmark::kMillisecond);

void BM_DiagramScanM12(benchmark::State& state) {
    const Loop& m12 = builtin_loop("M(S3,2)");
    OsbornOptions opts;
    opts.jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_diagram_all(m12, DiagramWhich::d7, opts));
}
BENCHMARK(BM_DiagramScanM12)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
