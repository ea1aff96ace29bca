#include <benchmark/benchmark.h>

#include "vrm/persistence.hpp"

namespace {

void BM_VrFiltration(benchmark::State& state) {
  vrm::DistanceMatrix d = vrm::sample_circle(static_cast<int>(state.range(0)));
  int max_dim = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(vrm::vr_filtration(d, max_dim).simplices.size());
}
BENCHMARK(BM_VrFiltration)->Args({12, 2})->Args({24, 2})->Args({12, 4})->Unit(benchmark::kMillisecond);

void BM_PersistentHomology(benchmark::State& state) {
  vrm::FiltrationComplex fc =
      vrm::vr_filtration(vrm::sample_circle(static_cast<int>(state.range(0))), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(vrm::persistent_homology(fc).size());
  state.counters["simplices"] = static_cast<double>(fc.simplices.size());
}
BENCHMARK(BM_PersistentHomology)->Args({12, 2})->Args({18, 2})->Args({24, 2})->Args({12, 4})->Args({14, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
