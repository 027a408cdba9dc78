#include <benchmark/benchmark.h>

#include <random>

#include "reinet/reinet.hpp"

using namespace reinet;

static void BM_EnumerateUniverse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_valence_le2());
}
BENCHMARK(BM_EnumerateUniverse)->Unit(benchmark::kMillisecond);

static void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_tables());
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

static void BM_ClassifyFree(benchmark::State& state) {
  auto nets = enumerate_valence_le2();
  for (auto _ : state) benchmark::DoNotOptimize(classify(nets));
}
BENCHMARK(BM_ClassifyFree)->Unit(benchmark::kMillisecond);

static void BM_Rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  RatMatrix m(n, n * n);
  for (auto& x : m.data) x = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(3)->Arg(5)->Arg(8);

static void BM_BalancedPartitions(benchmark::State& state) {
  auto nets = enumerate_valence_le2();
  for (auto _ : state)
    for (const auto& n : nets) benchmark::DoNotOptimize(balanced_partitions(n));
}
BENCHMARK(BM_BalancedPartitions)->Unit(benchmark::kMillisecond);

static void BM_Simulate(benchmark::State& state) {
  ReiNetwork net(parse_types("EEI"), SquareMatrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}},
                 SquareMatrix{{0, 0, 1}, {0, 0, 1}, {0, 0, 0}});
  auto field = grn_field(net, GrnParams{});
  SimConfig cfg;
  cfg.t_end = 50.0;
  cfg.x0 = std::vector<double>(6, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(integrate(field, cfg));
}
BENCHMARK(BM_Simulate)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
