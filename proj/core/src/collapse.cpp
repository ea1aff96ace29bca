#include "vrm/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vrm/errors.hpp"

namespace vrm {

namespace {

void check_t(double t) {
  if (!std::isfinite(t) || t < 0.0 || t > 1.0) throw DomainError("t must lie in [0, 1]");
}

// Offset of p from the arc start, with points a hair before the start mapped to 0.
double offset_in_arc(const Arc& a, Angle p) {
  double u = ccw_distance(a.start, p);
  return u > a.length + tol_ang() ? 0.0 : u;
}

}  // namespace

CoordinateSystem admissible_coordinate(const Measure& mu, double r) {
  check_scale(r);
  std::size_t best = 0;
  for (std::size_t i = 1; i < mu.size(); ++i) {
    if (mu[i].mass > mu[best].mass) best = i;
  }
  return {antipode(mu[best].position), 0.0};
}

int arc_index_v(const ArcDecomposition& decomp, const CoordinateSystem& cs, Angle p) {
  auto own = decomp.arc_of(p);
  if (!own) throw MembershipError("point lies in no arc");
  for (const Arc& a : decomp.arcs) {
    if (a.contains(cs.theta0, 0.0)) throw ExcludedPointError("coordinate base point lies inside an arc");
  }
  double mine = ccw_distance(cs.theta0, decomp.arcs[*own].start);
  int v = 0;
  for (const Arc& a : decomp.arcs) v += ccw_distance(cs.theta0, a.start) < mine;
  return v;
}

Collapse::Collapse(const Measure& mu, double r) : Collapse(mu, r, admissible_coordinate(mu, r)) {}

Collapse::Collapse(const Measure& mu, double r, const CoordinateSystem& cs)
    : mu_(mu), r_(r), decomp_(arc_decomposition(mu, r)), cs_(cs) {
  build();
}

void Collapse::build() {
  const std::size_t n = mu_.size();
  const std::size_t arcs = decomp_.count();

  // theta0 must avoid the hull of each arc's atoms.
  std::vector<double> lo(arcs, kTwoPi), hi(arcs, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Arc& a = decomp_.arcs[decomp_.atom_arc[i]];
    double u = offset_in_arc(a, mu_[i].position);
    lo[decomp_.atom_arc[i]] = std::min(lo[decomp_.atom_arc[i]], u);
    hi[decomp_.atom_arc[i]] = std::max(hi[decomp_.atom_arc[i]], u);
  }
  for (std::size_t a = 0; a < arcs; ++a) {
    Angle first = rotate(decomp_.arcs[a].start, lo[a]);
    Arc hull{first, hi[a] - lo[a], 0.0};
    if (hull.contains(cs_.theta0, tol_ang())) {
      throw ExcludedPointError("coordinate base point " + std::to_string(cs_.theta0.radians()) +
                               " lies inside an arc of the measure");
    }
  }

  x_.resize(n);
  for (std::size_t i = 0; i < n; ++i) x_[i] = chart_x(cs_, mu_[i].position);

  // Arcs are numbered by the chart order of their atoms.
  std::vector<double> arc_min(arcs, kTwoPi + cs_.y0 + 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    arc_min[decomp_.atom_arc[i]] = std::min(arc_min[decomp_.atom_arc[i]], x_[i]);
  }
  std::vector<int> order(arcs);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return arc_min[a] < arc_min[b]; });
  std::vector<int> rank(arcs);
  for (std::size_t j = 0; j < arcs; ++j) rank[order[j]] = static_cast<int>(j);

  v_.resize(n);
  const double step = kTwoPi / static_cast<double>(arcs);
  m_ = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v_[i] = rank[decomp_.atom_arc[i]];
    m_ += mu_[i].mass * (x_[i] - step * v_[i]);
  }
}

double Collapse::target(int v) const { return kTwoPi * v / static_cast<double>(decomp_.count()) + m_; }

Angle Collapse::point(std::size_t atom, double t) const {
  check_t(t);
  return chart_tau(cs_, (1.0 - t) * x_[atom] + t * target(v_[atom]));
}

Measure Collapse::at(double t) const {
  check_t(t);
  std::vector<Atom> atoms;
  atoms.reserve(mu_.size());
  for (std::size_t i = 0; i < mu_.size(); ++i) atoms.push_back({point(i, t), mu_[i].mass});
  return Measure::from_atoms(std::move(atoms), true);
}

CoordinateSystem transport_safe_coordinate(const Measure& mu, double r) {
  Collapse base(mu, r);
  const ArcDecomposition& dec = base.decomposition();
  const std::size_t arcs = dec.count();
  const std::size_t n = mu.size();

  // Hull of each arc in base chart values; chart order of arcs follows their index v.
  std::vector<double> lo(arcs, 1e300), hi(arcs, -1e300);
  for (std::size_t i = 0; i < n; ++i) {
    int v = base.arc_index(i);
    lo[v] = std::min(lo[v], base.chart_value(i));
    hi[v] = std::max(hi[v], base.chart_value(i));
  }
  const double tol = tol_ang();
  for (std::size_t v = 0; v < arcs; ++v) {
    Angle y = chart_tau(base.coordinates(), base.target(static_cast<int>(v)));
    Angle first = chart_tau(base.coordinates(), lo[v]);
    if (ccw_distance(first, y) <= hi[v] - lo[v] + tol || ccw_distance(first, y) >= kTwoPi - tol) {
      return {antipode(y), 0.0};
    }
  }
  // Some arc moves clockwise while its counter-clockwise neighbour moves counter-clockwise.
  for (std::size_t v = 0; v < arcs; ++v) {
    std::size_t w = (v + 1) % arcs;
    bool v_cw = base.target(static_cast<int>(v)) < lo[v];
    bool w_ccw = base.target(static_cast<int>(w)) > hi[w];
    if (!v_cw || !w_ccw) continue;
    Angle end_v = chart_tau(base.coordinates(), hi[v]);
    Angle start_w = chart_tau(base.coordinates(), lo[w]);
    double gap = ccw_distance(end_v, start_w);
    return {rotate(end_v, gap / 2.0), 0.0};
  }
  throw Error("no transport-safe coordinate found");
}

double arc_offset_m(const Measure& mu, int k, const CoordinateSystem& cs, double r) {
  Collapse c(mu, r, cs);
  if (c.k() != k) throw MembershipError("measure lies in V_" + std::to_string(2 * c.k() + 1));
  return c.offset();
}

namespace {

std::size_t atom_at(const Measure& mu, Angle p) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (geodesic_distance(mu[i].position, p) < tol_ang()) return i;
  }
  throw MembershipError("point is not in the support");
}

}  // namespace

Angle collapse_point(Angle p, const Measure& mu, double t, double r) {
  std::size_t i = atom_at(mu, p);
  return Collapse(mu, r).point(i, t);
}

Angle collapse_point(Angle p, const Measure& mu, double t, double r, const CoordinateSystem& cs) {
  std::size_t i = atom_at(mu, p);
  return Collapse(mu, r, cs).point(i, t);
}

Measure collapse_measure(const Measure& mu, double t, double r) { return Collapse(mu, r).at(t); }

std::vector<Measure> trajectory(const Measure& mu, double r, int steps) {
  if (steps < 2) throw DomainError("trajectory needs at least 2 steps");
  Collapse c(mu, r);
  std::vector<Measure> frames;
  frames.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) frames.push_back(c.at(static_cast<double>(i) / (steps - 1)));
  return frames;
}

Measure canonical_collapse(const Measure& mu, double r) { return Collapse(mu, r).at(1.0); }

}  // namespace vrm
