#include <benchmark/benchmark.h>

#include <map>

#include "cyldom/transfer.hpp"

namespace {

const cyldom::TransferSystem& system_for(std::size_t n) {
  static std::map<std::size_t, cyldom::TransferSystem> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, cyldom::TransferSystem::build(n)).first;
  return it->second;
}

void BM_EnumerateWords(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyldom::enumerate_words(n));
}
BENCHMARK(BM_EnumerateWords)->DenseRange(6, 12, 2)->Unit(benchmark::kMicrosecond);

void BM_BuildMatrix(benchmark::State& state) {
  const auto table = cyldom::enumerate_words(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cyldom::build_transition_matrix(table));
}
BENCHMARK(BM_BuildMatrix)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Matvec(benchmark::State& state) {
  const auto& sys = system_for(static_cast<std::size_t>(state.range(0)));
  const auto threads = static_cast<std::size_t>(state.range(1));
  auto x = cyldom::matvec(sys.transitions, sys.initial, threads);
  for (auto _ : state) {
    auto y = cyldom::matvec(sys.transitions, x, threads);
    benchmark::DoNotOptimize(y);
  }
  state.counters["nnz"] = static_cast<double>(sys.transitions.nonzeros());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sys.transitions.nonzeros()));
}
BENCHMARK(BM_Matvec)->Args({8, 1})->Args({10, 1})->Args({10, 2})->UseRealTime()->Unit(benchmark::kMicrosecond);

void BM_FindRecurrence(benchmark::State& state) {
  const auto& sys = system_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cyldom::find_recurrence(sys));
}
BENCHMARK(BM_FindRecurrence)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
