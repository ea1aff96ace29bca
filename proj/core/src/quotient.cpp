#include "vrm/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vrm/arcs.hpp"
#include "vrm/collapse.hpp"
#include "vrm/errors.hpp"
#include "vrm/transport.hpp"

namespace vrm {

namespace {

constexpr double kMassTol = 1e-8;

double polygon_period(int k) { return kTwoPi / (2.0 * k + 1.0); }

double circular_residue_gap(double a, double b, double period) {
  double d = std::fabs(std::fmod(a - b, period));
  return std::min(d, period - d);
}

void check_gamma_masses(int k, std::span<const double> masses) {
  if (k < 1) throw DomainError("gamma paths need k >= 1");
  if (masses.size() != static_cast<std::size_t>(2 * k - 1)) {
    throw ValidationError("gamma path needs " + std::to_string(2 * k - 1) + " masses");
  }
  double sum = 0.0;
  for (double a : masses) {
    if (!std::isfinite(a) || a <= 0.0) throw ValidationError("gamma masses must be positive");
    sum += a;
  }
  if (std::fabs(sum - 1.0) > kTolMass) throw ValidationError("gamma masses must sum to 1");
}

std::vector<double> segment_weights(int k, std::span<const double> a, int l, double tau) {
  const int n = 2 * k + 1;
  const int q = 2 * k - 1;
  const int b = static_cast<int>((static_cast<long>(l) * (k - 1)) % q);
  const int p0 = static_cast<int>((static_cast<long>(l) * k) % n);
  std::vector<double> w(n, 0.0);
  w[p0] = a[b] - tau;
  w[(p0 + 1) % n] = tau;
  for (int j = 1; j <= k - 1; ++j) w[(p0 + 1 + j) % n] = a[(b + j) % q];
  w[(p0 + k + 1) % n] = 0.0;
  for (int j = 1; j <= k - 1; ++j) w[(p0 + k + 1 + j) % n] = a[(b + k - 1 + j) % q];
  return w;
}

Measure polygon_measure(int k, const std::vector<double>& w) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) atoms.push_back({Angle(polygon_period(k) * static_cast<double>(i)), w[i]});
  }
  return Measure::from_atoms(std::move(atoms), true);
}

int segment_count(int k) { return (2 * k - 1) * (2 * k + 1); }

double segment_length(int k, std::span<const double> a, int l) {
  return a[static_cast<std::size_t>((static_cast<long>(l) * (k - 1)) % (2 * k - 1))];
}

}  // namespace

double RegularPolygonalMeasure::period() const { return polygon_period(k); }

Measure RegularPolygonalMeasure::to_measure() const {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (masses[i] > 0.0) atoms.push_back({Angle(phase + period() * static_cast<double>(i)), masses[i]});
  }
  return Measure::from_atoms(std::move(atoms), true);
}

RegularPolygonalMeasure polygonal_form(const Measure& polygon, int k) {
  const std::size_t n = static_cast<std::size_t>(2 * k + 1);
  if (polygon.size() != n) throw Error("collapsed measure does not have 2k+1 atoms");
  RegularPolygonalMeasure p;
  p.k = k;
  const double period = polygon_period(k);
  for (std::size_t i = 0; i < n; ++i) {
    double gap = ccw_distance(polygon[i].position, polygon[(i + 1) % n].position);
    if (n > 1 && std::fabs(gap - period) > 1e-7) throw Error("collapsed measure is not a regular polygon");
    p.masses.push_back(polygon[i].mass);
  }
  p.phase = std::fmod(polygon[0].position.radians(), period);
  if (p.phase < 0.0 || p.phase >= period) p.phase = 0.0;
  return p;
}

RegularPolygonalMeasure to_polygonal(const Measure& mu, double r) {
  Collapse c(mu, r);
  return polygonal_form(c.at(1.0), c.k());
}

bool same_class(const RegularPolygonalMeasure& a, const RegularPolygonalMeasure& b, double phase_tol,
                double mass_tol) {
  if (a.k != b.k) return false;
  return same_atoms(a.to_measure(), b.to_measure(), phase_tol, mass_tol);
}

bool equivalent(const Measure& mu1, const Measure& mu2, double r) {
  if (classify(mu1, r) != classify(mu2, r)) return false;
  return same_class(to_polygonal(mu1, r), to_polygonal(mu2, r), tol_ang(), kMassTol);
}

CellId cell_of(const Measure& mu, double r) {
  if (std::isfinite(r) && r >= kPi) return {-1, true};
  RegularPolygonalMeasure p = to_polygonal(mu, r);
  bool zero_phase = circular_residue_gap(p.phase, 0.0, p.period()) <= tol_ang();
  return {zero_phase ? 2 * p.k : 2 * p.k + 1, false};
}

double gamma_scale(int k) {
  if (k < 1) throw DomainError("gamma paths need k >= 1");
  double lo = 2.0 * k * kPi / (2.0 * k + 1.0);
  double hi = (2.0 * k + 2.0) * kPi / (2.0 * k + 3.0);
  return 0.5 * (lo + hi);
}

std::vector<double> gamma_weights(int k, std::span<const double> masses, double s) {
  check_gamma_masses(k, masses);
  if (!std::isfinite(s) || s < 0.0 || s > 1.0) throw DomainError("path parameter must lie in [0, 1]");
  double u = s * (2.0 * k + 1.0);
  const int segments = segment_count(k);
  for (int l = 0; l < segments; ++l) {
    double len = segment_length(k, masses, l);
    if (u < len || l == segments - 1) return segment_weights(k, masses, l, std::min(u, len));
    u -= len;
  }
  return segment_weights(k, masses, 0, 0.0);
}

Measure gamma_at(int k, std::span<const double> masses, double s) {
  return polygon_measure(k, gamma_weights(k, masses, s));
}

std::vector<Measure> gamma_path(int k, std::span<const double> masses, int samples) {
  check_gamma_masses(k, masses);
  if (samples < 1) throw DomainError("samples must be positive");
  std::vector<Measure> out;
  const int segments = segment_count(k);
  out.reserve(static_cast<std::size_t>(segments * samples + 1));
  for (int l = 0; l < segments; ++l) {
    double len = segment_length(k, masses, l);
    for (int i = 0; i < samples; ++i) {
      out.push_back(polygon_measure(k, segment_weights(k, masses, l, len * i / samples)));
    }
  }
  out.push_back(polygon_measure(k, segment_weights(k, masses, 0, 0.0)));
  return out;
}

AttachingReport attaching_degree(int k, std::span<const double> masses, int samples, int targets) {
  check_gamma_masses(k, masses);
  if (samples < 1 || targets < 1) throw DomainError("samples and targets must be positive");
  const double r = gamma_scale(k);
  const double period = polygon_period(k - 1);
  const int segments = segment_count(k);
  AttachingReport rep;

  // Sample parameters, measures and collapsed polygonal forms.
  std::vector<double> s_values;
  std::vector<std::vector<double>> weights;
  double acc = 0.0;
  for (int l = 0; l < segments; ++l) {
    double len = segment_length(k, masses, l);
    for (int i = 0; i < samples; ++i) {
      s_values.push_back((acc + len * i / samples) / (2.0 * k + 1.0));
      weights.push_back(segment_weights(k, masses, l, len * i / samples));
    }
    acc += len;
  }
  s_values.push_back(1.0);
  weights.push_back(segment_weights(k, masses, 0, 0.0));
  rep.closed = weights.front() == weights.back();

  rep.on_boundary = true;
  rep.stratum = true;
  std::vector<RegularPolygonalMeasure> forms;
  for (const auto& w : weights) {
    rep.on_boundary &= std::any_of(w.begin(), w.end(), [](double x) { return x <= 0.0; });
    Measure mu = polygon_measure(k, w);
    rep.stratum &= classify(mu, r) == k - 1;
    forms.push_back(to_polygonal(mu, r));
  }

  auto wrap = [period](double d) {
    d = std::fmod(d, period);
    if (d > period / 2.0) d -= period;
    if (d <= -period / 2.0) d += period;
    return d;
  };
  std::vector<double> psi(forms.size(), 0.0);
  rep.monotone = true;
  for (std::size_t j = 1; j < forms.size(); ++j) {
    double d = wrap(forms[j].phase - forms[j - 1].phase);
    rep.monotone &= d > 0.0;
    psi[j] = psi[j - 1] + d;
  }
  rep.total_rotation = psi.back();
  rep.degree = static_cast<int>(std::lround(rep.total_rotation / kTwoPi));

  const std::size_t q = masses.size();
  for (std::size_t shift = 1; shift < q && !rep.symmetric; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < q; ++i) same &= std::fabs(masses[i] - masses[(i + shift) % q]) <= 1e-12;
    rep.symmetric = same;
  }

  // Target classes: rotations of the starting polygon by a grid of angles.
  rep.targets = targets;
  rep.min_hits = 1 << 30;
  rep.max_hits = 0;
  rep.coincident = true;
  rep.surjective = true;
  const Measure start = forms.front().to_measure();
  const double sample_tol = kTwoPi / samples;
  for (int g = 0; g < targets; ++g) {
    double beta = kTwoPi * g / targets;
    RegularPolygonalMeasure target = to_polygonal(start.rotated(beta), r);

    bool near = false;
    for (const auto& f : forms) {
      RegularPolygonalMeasure aligned = f;
      if (circular_residue_gap(f.phase, target.phase, period) <= sample_tol) {
        aligned.phase = target.phase;
        near |= same_class(aligned, target, 1e-9, kMassTol);
      }
    }
    rep.surjective &= near;

    // Each crossing of the target phase residue is refined by bisection and tested for equality.
    std::vector<Measure> preimages;
    for (std::size_t j = 0; j + 1 < psi.size(); ++j) {
      double lo_gap = wrap(target.phase - forms[j].phase);
      if (lo_gap < 0.0) lo_gap += period;
      if (lo_gap >= psi[j + 1] - psi[j]) continue;
      double a = s_values[j], b = s_values[j + 1];
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (a + b);
        double pm = to_polygonal(gamma_at(k, masses, mid), r).phase;
        double moved = wrap(pm - forms[j].phase);
        if (moved < 0.0) moved += period;
        if (moved > period - 1e-3) moved -= period;
        (moved < lo_gap ? a : b) = mid;
      }
      Measure hit = gamma_at(k, masses, 0.5 * (a + b));
      if (same_class(to_polygonal(hit, r), target, 1e-7, kMassTol)) preimages.push_back(hit);
    }
    int hits = static_cast<int>(preimages.size());
    rep.min_hits = std::min(rep.min_hits, hits);
    rep.max_hits = std::max(rep.max_hits, hits);
    for (std::size_t i = 1; i < preimages.size(); ++i) {
      rep.coincident &= wasserstein_circle(preimages[0], preimages[i]) <= 1e-9;
    }
  }
  return rep;
}

}  // namespace vrm
