// Serial reference vs OpenMP kernels, plus the full single-attribute pipeline.
// Run with --benchmark_counters_tabular=true; set OMP_NUM_THREADS to vary the team.

#include "mildisc/dataset.hpp"
#include "mildisc/kernels.hpp"
#include "mildisc/mil.hpp"
#include "mildisc/modified_mil.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace mildisc;

namespace {

const std::vector<double>& column(std::size_t m) {
    static std::vector<std::vector<double>> cache(32);
    std::size_t slot = 0;
    while ((std::size_t{1} << slot) < m) ++slot;
    auto& col = cache[slot];
    if (col.size() != m) {
        std::mt19937_64 rng(m);
        std::normal_distribution<double> g(0.0, 1.0);
        col.resize(m);
        for (auto& x : col) x = rng() % 64 == 0 ? missing_value : g(rng);
    }
    return col;
}

void set_items(benchmark::State& state) {
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

template <ColumnStats (*Fn)(std::span<const double>)>
void stats(benchmark::State& state) {
    const auto& col = column(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(col));
    set_items(state);
}

template <BinCounts (*Fn)(std::span<const double>, const InitialPartition&, ImputeKey)>
void counts(benchmark::State& state) {
    const auto& col = column(static_cast<std::size_t>(state.range(0)));
    const auto part = init_partition(col, 3, MilParams{});
    for (auto _ : state) benchmark::DoNotOptimize(Fn(col, part, ImputeKey{1, 0}));
    set_items(state);
}

template <std::vector<int> (*Fn)(std::span<const double>, const InitialPartition&, std::span<const int>, ImputeKey)>
void by_subinterval(benchmark::State& state) {
    const auto& col = column(static_cast<std::size_t>(state.range(0)));
    const auto part = init_partition(col, 3, MilParams{});
    std::vector<int> table(part.n);
    for (std::size_t j = 0; j < part.n; ++j) table[j] = static_cast<int>(j / 4 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(col, part, table, ImputeKey{1, 0}));
    set_items(state);
}

template <LabeledColumn (*Fn)(std::span<const double>, std::span<const double>)>
void by_bounds(benchmark::State& state) {
    const auto& col = column(static_cast<std::size_t>(state.range(0)));
    std::vector<double> lowers;
    for (int i = -12; i <= 12; ++i) lowers.push_back(0.25 * i);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(col, lowers));
    set_items(state);
}

void pipeline_mil(benchmark::State& state) {
    const auto& col = column(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(discretize_attribute(col, 3, MilParams{20, 3, 1}));
    set_items(state);
}

void pipeline_modified(benchmark::State& state) {
    const auto& col = column(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(discretize_attribute_modified(col, 3, MilParams{20, 3, 1}));
    set_items(state);
}

void sizes(benchmark::internal::Benchmark* b) {
    for (std::int64_t m : {1 << 12, 1 << 16, 1 << 20, 1 << 23}) b->Arg(m);
}

} // namespace

BENCHMARK(stats<serial::column_stats>)->Name("column_stats/serial")->Apply(sizes);
BENCHMARK(stats<kernels::column_stats>)->Name("column_stats/omp")->Apply(sizes);
BENCHMARK(counts<serial::subinterval_counts>)->Name("subinterval_counts/serial")->Apply(sizes);
BENCHMARK(counts<kernels::subinterval_counts>)->Name("subinterval_counts/omp")->Apply(sizes);
BENCHMARK(by_subinterval<serial::label_by_subinterval>)->Name("label_by_subinterval/serial")->Apply(sizes);
BENCHMARK(by_subinterval<kernels::label_by_subinterval>)->Name("label_by_subinterval/omp")->Apply(sizes);
BENCHMARK(by_bounds<serial::label_by_bounds>)->Name("label_by_bounds/serial")->Apply(sizes);
BENCHMARK(by_bounds<kernels::label_by_bounds>)->Name("label_by_bounds/omp")->Apply(sizes);
BENCHMARK(pipeline_mil)->Name("pipeline/mil")->Apply(sizes);
BENCHMARK(pipeline_modified)->Name("pipeline/modified-mil")->Apply(sizes);

BENCHMARK_MAIN();
