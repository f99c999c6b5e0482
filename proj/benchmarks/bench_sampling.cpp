#include <benchmark/benchmark.h>

#include "gdseq/ensemble.hpp"
#include "gdseq/estimator.hpp"

namespace {

void BM_EnsembleTable(benchmark::State& state) {
    for (auto _ : state) {
        gdseq::EnsembleTable table(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(table.e_count());
    }
}
BENCHMARK(BM_EnsembleTable)->Arg(50)->Arg(200);

void BM_Sample(benchmark::State& state) {
    const gdseq::EnsembleTable table(static_cast<int>(state.range(0)));
    gdseq::Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(table.sample(rng));
    }
}
BENCHMARK(BM_Sample)->Arg(50)->Arg(200)->Arg(1000);

void BM_EstimateRatio(benchmark::State& state) {
    gdseq::EstimateOptions opts;
    opts.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdseq::estimate_ratio(static_cast<int>(state.range(0)), 10000, 7, opts));
    }
}
BENCHMARK(BM_EstimateRatio)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
