#include "vrm/verify/random.hpp"

#include <algorithm>
#include <array>

#include "vrm/arcs.hpp"

namespace vrm::verify {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32), 0x5eedu};
  return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return uniform(rng, 0.0, 1.0) < p; }

double random_scale(Rng& rng) { return uniform(rng, 0.0, kPi); }

Measure random_stratum_measure(Rng& rng, double r, int k, int max_per_cluster) {
  const int n = 2 * k + 1;
  const double slack = r - 2.0 * k * kPi / n;
  const double phase = uniform(rng, 0.0, kTwoPi);
  // Boundary mode pushes atoms to the edge of the allowed band so that the diameter equals r.
  const bool boundary = coin(rng, 0.2);
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) {
    double vertex = phase + kTwoPi * i / n;
    int count = uniform_int(rng, 1, max_per_cluster);
    double jitter = boundary ? 0.0 : uniform(rng, -slack / 4.0, slack / 4.0);
    for (int j = 0; j < count; ++j) {
      double offset = boundary ? (j % 2 == 0 ? slack / 2.0 : -slack / 2.0) : jitter + uniform(rng, -slack / 4.0, slack / 4.0);
      atoms.push_back({Angle(vertex + offset), uniform(rng, 0.05, 1.0)});
    }
  }
  return Measure::from_atoms(std::move(atoms), true);
}

Measure random_thickening_measure(Rng& rng, double r, int max_per_cluster) {
  int k = uniform_int(rng, 0, std::min(max_k(r), kMaxGeneratedK));
  return random_stratum_measure(rng, r, k, max_per_cluster);
}

Measure random_measure(Rng& rng, int max_atoms) {
  int count = uniform_int(rng, 1, max_atoms);
  std::vector<Atom> atoms;
  for (int i = 0; i < count; ++i) atoms.push_back({Angle(uniform(rng, 0.0, kTwoPi)), uniform(rng, 0.05, 1.0)});
  return Measure::from_atoms(std::move(atoms), true);
}

std::vector<double> random_simplex_point(Rng& rng, int n) {
  std::vector<double> x(static_cast<std::size_t>(n) + 1);
  std::exponential_distribution<double> e(1.0);
  for (double& v : x) v = e(rng);
  if (coin(rng, 0.125)) x[static_cast<std::size_t>(uniform_int(rng, 0, n))] = 0.0;
  double s = 0.0;
  for (double v : x) s += v;
  if (s == 0.0) {
    x.assign(x.size(), 0.0);
    x[0] = 1.0;
    return x;
  }
  for (double& v : x) v /= s;
  return x;
}

std::vector<double> random_weights(Rng& rng, int count) {
  std::vector<double> w(static_cast<std::size_t>(count));
  for (double& v : w) v = uniform(rng, 0.05, 1.0);
  double s = 0.0;
  for (double v : w) s += v;
  for (double& v : w) v /= s;
  // Division leaves the sum within a few ulps of 1; absorb the remainder in the first entry.
  double t = 0.0;
  for (std::size_t i = 1; i < w.size(); ++i) t += w[i];
  w[0] = 1.0 - t;
  return w;
}

}  // namespace vrm::verify
