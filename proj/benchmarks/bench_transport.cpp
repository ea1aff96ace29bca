#include <benchmark/benchmark.h>

#include "vrm/transport.hpp"
#include "vrm/verify/random.hpp"

namespace {

std::vector<std::pair<vrm::Measure, vrm::Measure>> pairs(int atoms) {
  std::vector<std::pair<vrm::Measure, vrm::Measure>> out;
  for (std::uint64_t i = 0; i < 64; ++i) {
    vrm::verify::Rng rng = vrm::verify::trial_rng(1, i);
    std::vector<double> wa = vrm::verify::random_weights(rng, atoms), wb = vrm::verify::random_weights(rng, atoms);
    std::vector<std::pair<double, double>> a, b;
    for (int j = 0; j < atoms; ++j) {
      a.emplace_back(vrm::verify::uniform(rng, 0, vrm::kTwoPi), wa[static_cast<std::size_t>(j)]);
      b.emplace_back(vrm::verify::uniform(rng, 0, vrm::kTwoPi), wb[static_cast<std::size_t>(j)]);
    }
    out.emplace_back(vrm::make_measure(a, true), vrm::make_measure(b, true));
  }
  return out;
}

void BM_WassersteinLp(benchmark::State& state) {
  auto ps = pairs(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(vrm::wasserstein_lp(a, b).distance);
  }
}
BENCHMARK(BM_WassersteinLp)->Arg(2)->Arg(6)->Arg(16)->Arg(32);

void BM_WassersteinCircle(benchmark::State& state) {
  auto ps = pairs(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(vrm::wasserstein_circle(a, b));
  }
}
BENCHMARK(BM_WassersteinCircle)->Arg(2)->Arg(6)->Arg(16)->Arg(32)->Arg(256);

}  // namespace
