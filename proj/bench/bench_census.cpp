// Serial reference loops against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "matecensus/census.hpp"
#include "matecensus/generate.hpp"

using namespace matecensus;

namespace {

const std::vector<Graph>& graphs(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_connected_graphs(n)).first;
  return it->second;
}

const Parameter kJoint = Parameter::joint(InvariantKind{Flavor::Spec, MatrixKind::WA},
                                          InvariantKind{Flavor::Snf, MatrixKind::DL});

void BM_KeysSerial(benchmark::State& state) {
  const auto& gs = graphs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_keys_serial(gs, kJoint));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gs.size()));
}

void BM_KeysParallel(benchmark::State& state) {
  const auto& gs = graphs(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(compute_keys_parallel(gs, kJoint, workers));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gs.size()));
}

void BM_AugmentSerial(benchmark::State& state) {
  const auto parents = gen_all_graphs(static_cast<int>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(augment_serial(parents, true));
}

void BM_AugmentParallel(benchmark::State& state) {
  const auto parents = gen_all_graphs(static_cast<int>(state.range(0)) - 1);
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(augment_parallel(parents, true, workers));
}

}  // namespace

BENCHMARK(BM_KeysSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_KeysParallel)->ArgsProduct({{7, 8}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AugmentSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AugmentParallel)->ArgsProduct({{7, 8}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
