#include <benchmark/benchmark.h>

#include <random>

#include "qlines/bounds.hpp"
#include "qlines/closure.hpp"
#include "qlines/negcurves.hpp"
#include "random_models.hpp"

namespace {

using namespace qlines;

void BM_EnumerateMinusOne(benchmark::State& state) {
  const SurfaceModel s(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minus_one(s));
}
BENCHMARK(BM_EnumerateMinusOne)->DenseRange(5, 8);

void BM_Configurations(benchmark::State& state) {
  const SurfaceModel s(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(disjoint_configurations(s, s.n()));
}
BENCHMARK(BM_Configurations)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_ChowBound(benchmark::State& state) {
  const auto d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(chow_component_bound(d, 6));
}
BENCHMARK(BM_ChowBound)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_ClosureAllPairs(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<IncidenceModel> models;
  for (int i = 0; i < 50; ++i) models.push_back(testing::random_model(rng, 10, 15).model());
  for (auto _ : state) {
    for (const auto& m : models) benchmark::DoNotOptimize(e_distribution(m));
    for (const auto& m : models) benchmark::DoNotOptimize(assumption_check(m));
  }
}
BENCHMARK(BM_ClosureAllPairs)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
