#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace vrm {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Bar {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;

  bool infinite() const { return death == kInfinity; }
  double length() const { return death - birth; }
};

std::vector<Bar> theoretical_barcode(int max_dim);

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

// Geodesic distances between n evenly spaced points; ties are bit-identical.
DistanceMatrix sample_circle(int n);

struct Simplex {
  std::vector<int> vertices;
  double value = 0.0;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

struct FiltrationComplex {
  std::vector<Simplex> simplices;
  int max_dim = 0;
};

inline constexpr std::size_t kDefaultSimplexBudget = 2'000'000;

// All simplices up to dimension max_dim + 1, ordered by (value, dim, lexicographic vertices).
FiltrationComplex vr_filtration(const DistanceMatrix& d, int max_dim, std::size_t budget = kDefaultSimplexBudget);

// Z/2 persistence of a filtration whose faces precede their cofaces. Bars in dimension
// max_dim + 1 are incomplete and only reported when include_top is set.
std::vector<Bar> persistent_homology(const FiltrationComplex& fc, bool include_top = false);

struct MatchedBar {
  Bar computed;
  Bar theoretical;
  double birth_error = 0.0;
  double death_error = 0.0;
};

// Endpoint comparisons allow this much floating-point noise on top of the requested tolerance.
inline constexpr double kEndpointSlack = 1e-9;

struct BarcodeComparison {
  double tol = 0.0;
  std::vector<MatchedBar> matched;
  std::vector<Bar> unmatched_computed;    // only bars longer than tol + kEndpointSlack
  std::vector<Bar> unmatched_theoretical;

  bool within_tolerance() const;
};

BarcodeComparison compare_barcodes(std::span<const Bar> computed, std::span<const Bar> theoretical, double tol);

// Alternating bar count alive at v minus alternating simplex count with value <= v.
long euler_defect(const FiltrationComplex& fc, std::span<const Bar> bars_with_top, double v);

}  // namespace vrm
