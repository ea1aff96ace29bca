#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vrm/measure.hpp"

namespace vrm::verify {

using Rng = std::mt19937_64;

// Independent stream for one trial, a pure function of (seed, trial).
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

double uniform(Rng& rng, double lo, double hi);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double p);

double random_scale(Rng& rng);

// K(r) is unbounded as r approaches pi; generated strata stop here.
inline constexpr int kMaxGeneratedK = 8;

// Measure with support diameter <= r. Picks k <= min(K(r), kMaxGeneratedK), places one cluster per vertex of a
// jittered regular (2k+1)-gon and scatters up to max_per_cluster atoms in each cluster.
Measure random_thickening_measure(Rng& rng, double r, int max_per_cluster = 3);
// Same construction with k fixed.
Measure random_stratum_measure(Rng& rng, double r, int k, int max_per_cluster = 3);

// Unconstrained measure with 1..max_atoms atoms.
Measure random_measure(Rng& rng, int max_atoms);

// Point of the n-simplex, occasionally on its boundary.
std::vector<double> random_simplex_point(Rng& rng, int n);

// Positive weights summing to 1.
std::vector<double> random_weights(Rng& rng, int count);

}  // namespace vrm::verify
