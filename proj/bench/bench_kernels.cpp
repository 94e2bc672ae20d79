#include <benchmark/benchmark.h>

#include <map>

#include "nldim/campaigns.hpp"
#include "nldim/generators.hpp"
#include "nldim/solver.hpp"

using namespace nldim;

namespace {

const Graph& sample_graph(int n) {
  static thread_local std::map<int, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Graph g = random_connected(n, 4.0 / n, 42);
    (void)g.distances();
    it = cache.emplace(n, std::move(g)).first;
  }
  return it->second;
}

void BM_BuildInstanceSerial(benchmark::State& state) {
  const Graph& g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::build_instance(g, PairMode::NonAdjacent));
}

void BM_BuildInstanceParallel(benchmark::State& state) {
  const Graph& g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_instance(g, PairMode::NonAdjacent));
}

void run_campaign(benchmark::State& state, Execution execution) {
  CampaignParams p;
  p.execution = execution;
  p.max_n = 5;
  for (auto _ : state) benchmark::DoNotOptimize(verify("eq1", p));
}

void BM_CampaignSerial(benchmark::State& state) { run_campaign(state, Execution::Serial); }
void BM_CampaignParallel(benchmark::State& state) { run_campaign(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_BuildInstanceSerial)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BuildInstanceParallel)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CampaignSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
