#include <benchmark/benchmark.h>

#include "gdseq/counting.hpp"
#include "gdseq/ragged_table.hpp"

namespace {

void BM_CountAllImproved(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdseq::count_all_improved(n, gdseq::FillOptions{1, 0, {}}));
    }
}
BENCHMARK(BM_CountAllImproved)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_CountLBaseline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdseq::count_L_baseline(n, gdseq::FillOptions{1, 0, {}}));
    }
}
BENCHMARK(BM_CountLBaseline)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_RaggedFill(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        gdseq::RaggedSlabTable table(gdseq::RaggedShape::for_length(n));
        table.fill(gdseq::FillOptions{1, 0, {}});
        benchmark::DoNotOptimize(table.raw_cell(0, 0, 0, 0));
    }
    state.counters["cells"] = static_cast<double>(gdseq::RaggedSlabTable(gdseq::RaggedShape::for_length(n)).cell_count());
}
BENCHMARK(BM_RaggedFill)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_ThreeVariate(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdseq::p_nkl_dp(static_cast<long long>(side) * side / 2, side, side));
    }
}
BENCHMARK(BM_ThreeVariate)->Arg(20)->Arg(40);

}  // namespace
