// Serial references vs OpenMP kernels on BA(n, 3). Arg = n.

#include <map>

#include <benchmark/benchmark.h>

#include "gnne/centrality.hpp"
#include "gnne/evaluation.hpp"
#include "gnne/graph.hpp"
#include "gnne/sir.hpp"

namespace {

const gnne::Graph& ba(std::int64_t n) {
  static std::map<std::int64_t, gnne::Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gnne::generate_ba(static_cast<std::size_t>(n), 3, 17)).first;
  return it->second;
}

void ranking(benchmark::State& state, gnne::RankedList (*fn)(const gnne::Graph&)) {
  const auto& g = ba(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fn(g));
}

void global_efficiency(benchmark::State& state, double (*fn)(const gnne::Graph&, gnne::EfficiencyBase)) {
  const auto& g = ba(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fn(g, gnne::EfficiencyBase::survivors));
}

void sir_scores(benchmark::State& state,
                std::vector<double> (*fn)(const gnne::Graph&, double, std::size_t, std::uint64_t)) {
  const auto& g = ba(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fn(g, 0.1, 50, 3));
}

}  // namespace

BENCHMARK_CAPTURE(ranking, betweenness_parallel, &gnne::betweenness)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(ranking, betweenness_serial, &gnne::serial::betweenness)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(ranking, closeness_parallel, &gnne::closeness)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(ranking, closeness_serial, &gnne::serial::closeness)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(ranking, harmonic_parallel, &gnne::harmonic)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(ranking, harmonic_serial, &gnne::serial::harmonic)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(global_efficiency, parallel, &gnne::efficiency)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(global_efficiency, serial, &gnne::serial::efficiency)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sir_scores, parallel, &gnne::sir_node_scores)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sir_scores, serial, &gnne::serial::sir_node_scores)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
