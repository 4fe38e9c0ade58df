#include <benchmark/benchmark.h>

#include "bergfan/catalog.hpp"
#include "bergfan/fan.hpp"
#include "bergfan/matroid.hpp"
#include "bergfan/moduli.hpp"
#include "bergfan/radial.hpp"
#include "bergfan/tropical.hpp"

namespace {

using namespace bergfan;

void BM_EnumerateFlats(benchmark::State& state) {
  const Graph g = Graph::complete_range(2, static_cast<Label>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_flats(g));
}
BENCHMARK(BM_EnumerateFlats)->DenseRange(4, 7);

void BM_BergmanFan(benchmark::State& state) {
  const Graph g = Graph::complete_range(2, static_cast<Label>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(bergman_fan(g));
}
BENCHMARK(BM_BergmanFan)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_IsBalanced(benchmark::State& state) {
  const Fan fan = bergman_fan(Graph::complete_range(2, static_cast<Label>(state.range(0)) + 1));
  for (auto _ : state) benchmark::DoNotOptimize(is_balanced(fan));
}
BENCHMARK(BM_IsBalanced)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateTypes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_types(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateTypes)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_PsiRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto chains = enumerate_all_chains(ambient_complete(n));
  for (auto _ : state) {
    for (const auto& c : chains) benchmark::DoNotOptimize(psi_radial_to_cof(psi_cof_to_radial(n, c)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(chains.size()));
}
BENCHMARK(BM_PsiRoundTrip)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

void BM_ModuliFanRad(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moduli_fan_rad(n, named_graph("k4-minus-e35-e45")));
}
BENCHMARK(BM_ModuliFanRad)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ModuliFanRadComplete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moduli_fan_rad(n));
}
BENCHMARK(BM_ModuliFanRadComplete)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
