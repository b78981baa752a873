#include <benchmark/benchmark.h>

#include "commgraph/extremal.hpp"
#include "commgraph/oracle.hpp"

using namespace commgraph;

namespace {

void BM_EdgeCountFast(benchmark::State& state) {
  const RingPtr ring = Ring::modular(std::uint64_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(edge_count_fast(*ring));
  }
}
BENCHMARK(BM_EdgeCountFast)->Arg(8)->Arg(16)->Arg(27)->Arg(64);

void BM_EdgeCountNaive(benchmark::State& state) {
  const RingPtr ring = Ring::modular(std::uint64_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_edge_count(ring));
  }
}
BENCHMARK(BM_EdgeCountNaive)->Arg(8)->Arg(16);

void BM_BuildGraph(benchmark::State& state) {
  const RingPtr ring = Ring::modular(std::uint64_t(state.range(0)));
  for (auto _ : state) {
    const CommutingGraph graph(ring);
    benchmark::DoNotOptimize(graph.edge_count());
  }
}
BENCHMARK(BM_BuildGraph)->Arg(8)->Arg(10)->Arg(16);

void BM_Diameter(benchmark::State& state) {
  const CommutingGraph graph(Ring::modular(std::uint64_t(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph.diameter());
  }
}
BENCHMARK(BM_Diameter)->Arg(8)->Arg(10)->Arg(16);

void BM_MaxClique(benchmark::State& state) {
  const CommutingGraph graph(Ring::modular(std::uint64_t(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_clique(graph, 600.0));
  }
}
BENCHMARK(BM_MaxClique)->Arg(6)->Arg(8)->Arg(10);

void BM_MaxIndependentSet(benchmark::State& state) {
  const CommutingGraph graph(Ring::modular(std::uint64_t(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_independent_set(graph, 600.0));
  }
}
BENCHMARK(BM_MaxIndependentSet)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
