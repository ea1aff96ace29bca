#include <benchmark/benchmark.h>

#include "vrm/arcs.hpp"
#include "vrm/collapse.hpp"
#include "vrm/quotient.hpp"
#include "vrm/verify/random.hpp"

namespace {

struct Case {
  vrm::Measure mu;
  double r;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  for (std::uint64_t i = 0; i < 256; ++i) {
    vrm::verify::Rng rng = vrm::verify::trial_rng(2, i);
    double r = vrm::verify::random_scale(rng);
    out.push_back({vrm::verify::random_thickening_measure(rng, r), r});
  }
  return out;
}

void BM_ArcDecomposition(benchmark::State& state) {
  auto cs = cases();
  std::size_t i = 0;
  for (auto _ : state) {
    const Case& c = cs[i++ % cs.size()];
    benchmark::DoNotOptimize(vrm::arc_decomposition(c.mu, c.r).count());
  }
}
BENCHMARK(BM_ArcDecomposition);

void BM_MaxArcsExtension(benchmark::State& state) {
  auto cs = cases();
  std::size_t i = 0;
  for (auto _ : state) {
    const Case& c = cs[i++ % cs.size()];
    benchmark::DoNotOptimize(vrm::max_arcs_extension(c.mu, c.r));
  }
}
BENCHMARK(BM_MaxArcsExtension);

void BM_CanonicalCollapse(benchmark::State& state) {
  auto cs = cases();
  std::size_t i = 0;
  for (auto _ : state) {
    const Case& c = cs[i++ % cs.size()];
    benchmark::DoNotOptimize(vrm::canonical_collapse(c.mu, c.r).size());
  }
}
BENCHMARK(BM_CanonicalCollapse);

void BM_Trajectory(benchmark::State& state) {
  auto cs = cases();
  std::size_t i = 0;
  int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Case& c = cs[i++ % cs.size()];
    benchmark::DoNotOptimize(vrm::trajectory(c.mu, c.r, steps).size());
  }
}
BENCHMARK(BM_Trajectory)->Arg(16)->Arg(256);

void BM_AttachingDegree(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::vector<double> masses(static_cast<std::size_t>(2 * k - 1));
  double total = 0.0;
  for (std::size_t j = 0; j < masses.size(); ++j) total += masses[j] = 1.0 + static_cast<double>(j);
  for (double& m : masses) m /= total;
  for (auto _ : state) benchmark::DoNotOptimize(vrm::attaching_degree(k, masses).degree);
}
BENCHMARK(BM_AttachingDegree)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
