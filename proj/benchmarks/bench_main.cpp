#include <benchmark/benchmark.h>

#include "fpl/crossing.hpp"
#include "fpl/schedule.hpp"
#include "fpl/series.hpp"

using namespace fpl;

static void BM_Autocorrelation(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    std::vector<int> syms(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) syms[static_cast<size_t>(i)] = (i * i + i / 3) % 2;
    Word w(2, syms);
    for (auto _ : state) benchmark::DoNotOptimize(autocorrelation(w));
}
BENCHMARK(BM_Autocorrelation)->Arg(16)->Arg(64)->Arg(256);

static void BM_ComputeSeries(benchmark::State& state) {
    Word w = Word::parse("10010010");
    const int horizon = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_series(w, horizon));
}
BENCHMARK(BM_ComputeSeries)->Arg(128)->Arg(512)->Arg(2048);

static void BM_ComparePair(benchmark::State& state) {
    Word a = Word::parse("10101010");
    Word b = Word::parse("10010010");
    for (auto _ : state) benchmark::DoNotOptimize(compare_pair_adaptive(a, b));
}
BENCHMARK(BM_ComparePair);

static void BM_IntervalPartition(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(interval_partition(2, k, 0, 1));
}
BENCHMARK(BM_IntervalPartition)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ScheduleSurvival(benchmark::State& state) {
    auto sched = greedy_schedule(2, 4, 80);
    for (auto _ : state) benchmark::DoNotOptimize(schedule_survival(sched));
}
BENCHMARK(BM_ScheduleSurvival)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
