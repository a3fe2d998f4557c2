#include <benchmark/benchmark.h>

#include "matchmult/matching.hpp"
#include "matchmult/graph.hpp"
#include "matchmult/sweep.hpp"

using namespace matchmult;

namespace {

SweepConfig config(const char* campaign, int n_max, int jobs) {
    SweepConfig c;
    c.campaign = campaign;
    c.n_max = n_max;
    c.jobs = jobs;
    return c;
}

void BM_MainTheoremSerial(benchmark::State& state) {
    const auto c = config("main-theorem", static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c).subjects);
}

void BM_MainTheoremParallel(benchmark::State& state) {
    const auto c = config("main-theorem", static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c).subjects);
}

void BM_EigenvectorSerial(benchmark::State& state) {
    const auto c = config("eigenvector", 9, 1);
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c).subjects);
}

void BM_EigenvectorParallel(benchmark::State& state) {
    const auto c = config("eigenvector", 9, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c).subjects);
}

void BM_MatchingRecurrence(benchmark::State& state) {
    const Graph g = builtin("paper:G14");
    for (auto _ : state) benchmark::DoNotOptimize(recurrence_matching_polynomial(g));
}

void BM_MatchingEngine(benchmark::State& state) {
    const Graph g = builtin("paper:G14");
    for (auto _ : state) {
        MatchingEngine engine;
        benchmark::DoNotOptimize(engine(g));
    }
}

}  // namespace

BENCHMARK(BM_MainTheoremSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MainTheoremParallel)->ArgsProduct({{8, 9}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EigenvectorSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EigenvectorParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MatchingRecurrence)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MatchingEngine)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
