#include <benchmark/benchmark.h>

#include "sepekr/graph.hpp"
#include "sepekr/weighted.hpp"

using namespace sepekr;

namespace {

// Intersection graph of [n]^(r)_k: its maximum cliques are the maximum
// intersecting families.
Graph meets(int n, int r, int k) { return build_schrijver(n, r, k).adjacency.complement(); }

const Graph& instance(int id) {
  static const Graph g0 = meets(14, 4, 1);
  static const Graph g1 = meets(15, 3, 2);
  static const Graph g2 = meets(16, 2, 3);
  static const Graph g3 = build_kneser(9, 3).adjacency.complement();
  switch (id) {
    case 0: return g0;
    case 1: return g1;
    case 2: return g2;
    default: return g3;
  }
}

void label(benchmark::State& state) {
  static const char* names[] = {"SG(14,4,1)", "SG(15,3,2)", "SG(16,2,3)", "K(9,3)"};
  state.SetLabel(names[state.range(0)]);
}

void BM_Serial(benchmark::State& state) {
  const Graph& g = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_clique_serial(g).weight);
  label(state);
}

void BM_Parallel(benchmark::State& state) {
  const Graph& g = instance(static_cast<int>(state.range(0)));
  set_solver_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(max_clique_parallel(g).weight);
  label(state);
}

void BM_WeightedSerial(benchmark::State& state) {
  const auto sets = enumerate_separated(13, 3, 1);
  std::vector<std::uint64_t> w;
  for (const auto& a : sets) w.push_back(to_u64(weight(a, 1)));
  const Graph g = meets(13, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_clique_serial(g, w).weight);
}

void BM_WeightedParallel(benchmark::State& state) {
  const auto sets = enumerate_separated(13, 3, 1);
  std::vector<std::uint64_t> w;
  for (const auto& a : sets) w.push_back(to_u64(weight(a, 1)));
  const Graph g = meets(13, 3, 1);
  set_solver_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_clique_parallel(g, w).weight);
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WeightedSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
