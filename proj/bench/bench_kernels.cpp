// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "gwh/characters.hpp"
#include "gwh/fock.hpp"
#include "gwh/gw.hpp"
#include "gwh/hurwitz.hpp"
#include "gwh/oracle.hpp"

namespace {

gwh::Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? gwh::Execution::serial : gwh::Execution::parallel;
}

void BM_CharacterTable(benchmark::State& state) {
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gwh::CharacterTable::build(d, mode(state)));
}
BENCHMARK(BM_CharacterTable)->ArgsProduct({{0, 1}, {12, 14}})->Unit(benchmark::kMillisecond);

void BM_MonodromyCount(benchmark::State& state) {
  const int d = static_cast<int>(state.range(1));
  const std::vector<gwh::Partition> profiles(3, gwh::Partition({2}) + gwh::Partition::ones(d - 2));
  gwh::count_monodromy_tuples(0, d, profiles, gwh::Execution::serial);
  for (auto _ : state) benchmark::DoNotOptimize(gwh::count_monodromy_tuples(0, d, profiles, mode(state)));
}
BENCHMARK(BM_MonodromyCount)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

void BM_StationarySum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gwh::stationary_disconnected(0, d, {3, 4, 5}, mode(state)));
}
BENCHMARK(BM_StationarySum)->ArgsProduct({{0, 1}, {10, 14}})->Unit(benchmark::kMillisecond);

void BM_Trace(benchmark::State& state) {
  const int q = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const std::vector<gwh::WedgeOperator> ops{gwh::Ecal{0, gwh::LinearForm::variable(0, 2)},
                                              gwh::Ecal{0, gwh::LinearForm::variable(1, 2)}};
    benchmark::DoNotOptimize(gwh::trace_qH(ops, 2, q, 6, mode(state)));
  }
}
BENCHMARK(BM_Trace)->ArgsProduct({{0, 1}, {6, 8}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
