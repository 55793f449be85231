#include <benchmark/benchmark.h>

#include "antimagic/bounds.hpp"
#include "antimagic/construction.hpp"
#include "antimagic/solver.hpp"

using namespace antimagic;

static void BM_ConstructOdd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_odd(n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ConstructOdd)->RangeMultiplier(3)->Range(3, 243)->Complexity();

static void BM_ConstructEven(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)) * 2;
  for (auto _ : state) benchmark::DoNotOptimize(construct_even(n));
}
BENCHMARK(BM_ConstructEven)->Arg(3)->Arg(10)->Arg(50)->Arg(100);

static void BM_VerifyCertificate(benchmark::State& state) {
  const auto r = construct_odd(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(r.certificate, r.graph));
}
BENCHMARK(BM_VerifyCertificate)->Arg(11)->Arg(101)->Arg(199);

static void BM_SweepLemma21(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_lemma21(SweepRange{2, 50, 1, 50}));
}
BENCHMARK(BM_SweepLemma21);

static void BM_SweepLemma22(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_lemma22(SweepRange{3, 50, 1, 50}));
}
BENCHMARK(BM_SweepLemma22);

static void BM_ExactTriangleCorona(benchmark::State& state) {
  const Graph g = corona(cycle(3), null_graph(1));
  for (auto _ : state) benchmark::DoNotOptimize(exact_chi_la(g));
}
BENCHMARK(BM_ExactTriangleCorona);

// Symmetry breaking on (1) and off (0).
static void BM_ExactFriendshipCorona2(benchmark::State& state) {
  const Graph g = friendship_corona(2, 1);
  SearchConfig cfg;
  cfg.symmetry_breaking = state.range(0) != 0;
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = exact_chi_la(g, cfg).nodes_explored;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExactFriendshipCorona2)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

static void BM_ExactFanCorona3(benchmark::State& state) {
  const Graph g = fan_corona(3, 1);
  SearchConfig cfg;
  cfg.parallel_width = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_chi_la(g, cfg));
}
BENCHMARK(BM_ExactFanCorona3)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
