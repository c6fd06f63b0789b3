// Serial reference kernels against their OpenMP counterparts.
// Run with HM_WORKERS or --benchmark_filter to pick a configuration.

#include <benchmark/benchmark.h>

#include "hm/enumerate.hpp"
#include "hm/random.hpp"
#include "hm/sweep.hpp"

using namespace hm;

namespace {

SweepQuery fractional_query() {
  return {1, {Rational(1), Rational(3, 2), Rational(2)}, MatchingMode::Fractional, true};
}

std::vector<VertexSet> all_sets(std::size_t n, std::size_t d) {
  std::vector<VertexSet> sets;
  for_each_combination(n, d, [&](std::span<const Vertex> c) {
    sets.emplace_back(c.begin(), c.end());
    return true;
  });
  return sets;
}

void BM_SweepSerial(benchmark::State& state) {
  const EdgeUniverse u(state.range(0), 3);
  const SweepQuery q = fractional_query();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(u, q, {0, u.count()}));
  state.SetItemsProcessed(state.iterations() * u.count());
}

void BM_SweepParallel(benchmark::State& state) {
  const EdgeUniverse u(state.range(0), 3);
  const SweepQuery q = fractional_query();
  set_worker_count(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(u, q, {0, u.count()}));
  set_worker_count(0);
  state.SetItemsProcessed(state.iterations() * u.count());
}

void BM_LinkValuesSerial(benchmark::State& state) {
  const Hypergraph h = random_graph(state.range(0), 4, Rational(1, 2), 7);
  const auto sets = all_sets(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(link_values_serial(h, sets));
}

void BM_LinkValuesParallel(benchmark::State& state) {
  const Hypergraph h = random_graph(state.range(0), 4, Rational(1, 2), 7);
  const auto sets = all_sets(state.range(0), 2);
  set_worker_count(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(link_values_parallel(h, sets));
  set_worker_count(0);
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->ArgsProduct({{5, 6}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LinkValuesSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinkValuesParallel)->ArgsProduct({{10, 12}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
