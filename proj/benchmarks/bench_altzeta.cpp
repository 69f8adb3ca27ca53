#include <benchmark/benchmark.h>

#include "altzeta/mzv/amzv.hpp"
#include "altzeta/verify/checks.hpp"
#include "altzeta/verify/reduction.hpp"

using namespace altzeta;

static void BM_BuildD1(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_D1(order));
}
BENCHMARK(BM_BuildD1)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

static void BM_MainTheorem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_main_theorem(n, n));
}
BENCHMARK(BM_MainTheorem)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_GoalIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_goal_identity(n, n));
}
BENCHMARK(BM_GoalIdentity)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CorollaryRow(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(corollary_row(k, 3));
}
BENCHMARK(BM_CorollaryRow)->DenseRange(0, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_EvalAmzv(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const auto index = MzvIndex::parse("1,1,-4");
  for (auto _ : state) benchmark::DoNotOptimize(eval_amzv(index, digits));
}
BENCHMARK(BM_EvalAmzv)->Arg(30)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
