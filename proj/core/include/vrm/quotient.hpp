#pragma once

#include <span>
#include <vector>

#include "vrm/measure.hpp"

namespace vrm {

// masses[i] sits at phase + 2 pi i / (2k + 1); phase lies in [0, 2 pi / (2k + 1)).
struct RegularPolygonalMeasure {
  int k = 0;
  double phase = 0.0;
  std::vector<double> masses;

  double period() const;
  Measure to_measure() const;
};

struct CellId {
  int dim = 0;
  bool contractible = false;
};

RegularPolygonalMeasure to_polygonal(const Measure& mu, double r);
// Reads the polygonal form of a measure already supported on a regular polygon.
RegularPolygonalMeasure polygonal_form(const Measure& polygon, int k);
bool same_class(const RegularPolygonalMeasure& a, const RegularPolygonalMeasure& b, double phase_tol,
                double mass_tol);
bool equivalent(const Measure& mu1, const Measure& mu2, double r);
CellId cell_of(const Measure& mu, double r);

// Scale in the middle of the stratum where gamma paths for index k live.
double gamma_scale(int k);
// Vertex masses on the distinguished (2k+1)-gon at path parameter s in [0, 1].
std::vector<double> gamma_weights(int k, std::span<const double> masses, double s);
Measure gamma_at(int k, std::span<const double> masses, double s);
// samples per segment; (2k-1)(2k+1) segments plus the closing sample.
std::vector<Measure> gamma_path(int k, std::span<const double> masses, int samples = 64);

struct AttachingReport {
  int degree = 0;
  double total_rotation = 0.0;
  bool closed = false;        // first and last samples identical
  bool on_boundary = false;   // every sample has a vanished vertex
  bool stratum = false;       // every sample collapses to a (2k-1)-gon
  bool monotone = false;      // phase strictly increasing between samples
  bool symmetric = false;     // masses invariant under a nontrivial cyclic shift
  int targets = 0;
  int min_hits = 0;
  int max_hits = 0;
  bool coincident = false;    // all preimages of a target give the same measure
  bool surjective = false;    // every target is within 2 pi / samples of some sample
};

AttachingReport attaching_degree(int k, std::span<const double> masses, int samples = 64, int targets = 24);

}  // namespace vrm
