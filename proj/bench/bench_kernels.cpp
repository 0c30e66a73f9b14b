// Serial reference versus OpenMP kernels for the pair graph, the avoidance
// graph and the exhaustive cross-check.

#include <benchmark/benchmark.h>

#include "scc/avoidance.hpp"
#include "scc/constructions.hpp"
#include "scc/forcing.hpp"
#include "scc/oracle.hpp"

namespace {

void BM_PairGraphSerial(benchmark::State& state) {
  const scc::Graph g = scc::random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(scc::build_pair_graph_serial(g));
}

void BM_PairGraphParallel(benchmark::State& state) {
  const scc::Graph g = scc::random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(scc::build_pair_graph(g));
}

void BM_AvoidanceGraphSerial(benchmark::State& state) {
  const scc::Graph g = scc::random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(scc::build_avoidance_graph_serial(g));
}

void BM_AvoidanceGraphParallel(benchmark::State& state) {
  const scc::Graph g = scc::random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(scc::build_avoidance_graph(g));
}

void BM_Crosscheck(benchmark::State& state) {
  const scc::CrosscheckOptions options{.n = static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(scc::crosscheck_enumerate(options));
}

}  // namespace

BENCHMARK(BM_PairGraphSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairGraphParallel)->Arg(20)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AvoidanceGraphSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AvoidanceGraphParallel)->Arg(20)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Crosscheck)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
