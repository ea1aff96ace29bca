#include "vrm/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vrm/errors.hpp"

namespace vrm {

namespace {

enum Color { kBlue = 0, kRed = 1 };

struct Colored {
  double u;
  Color color;
};

std::vector<Angle> dedupe(std::span<const Angle> points) {
  std::vector<Angle> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Angle a, Angle b) { return a.radians() < b.radians(); });
  std::vector<Angle> out;
  for (Angle p : pts) {
    if (out.empty() || p.radians() - out.back().radians() >= tol_ang()) out.push_back(p);
  }
  if (out.size() > 1 && geodesic_distance(out.front(), out.back()) < tol_ang()) out.pop_back();
  return out;
}

void check_points(std::span<const Angle> points, double r) {
  check_scale(r);
  if (points.empty()) throw ValidationError("support must be non-empty");
  double diam = support_diameter(points);
  if (diam > r + tol_ang()) {
    throw NotInThickeningError("support diameter " + std::to_string(diam) + " exceeds r = " + std::to_string(r));
  }
}

// Colored points of the half circle [theta, theta + pi], theta the smallest-angle support point.
// Blue marks support points, red marks antipodes. Positions are offsets from theta.
struct HalfCircle {
  Angle theta;
  double d = 0.0;
  std::vector<Colored> pts;

  int changes() const {
    int c = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) c += pts[i].color != pts[i + 1].color;
    return c;
  }

  int capacity(std::size_t gap) const {
    double len = pts[gap + 1].u - pts[gap].u;
    double q = pts[gap].color == pts[gap + 1].color ? (len + tol_ang()) / (2.0 * d)
                                                     : (len - d + tol_ang()) / (2.0 * d);
    return q > 0.0 ? static_cast<int>(std::floor(q)) : 0;
  }
};

HalfCircle half_circle(std::span<const Angle> support, double r) {
  check_points(support, r);
  std::vector<Angle> pts = dedupe(support);
  HalfCircle h;
  h.theta = pts.front();
  h.d = kPi - r;
  h.pts.push_back({0.0, kBlue});
  h.pts.push_back({kPi, kRed});
  for (std::size_t i = 1; i < pts.size(); ++i) {
    double u = ccw_distance(h.theta, pts[i]);
    if (u < kPi) {
      h.pts.push_back({u, kBlue});
    } else {
      h.pts.push_back({u - kPi, kRed});
    }
  }
  std::sort(h.pts.begin(), h.pts.end(), [](const Colored& a, const Colored& b) { return a.u < b.u; });
  return h;
}

}  // namespace

bool Arc::contains(Angle p, double slack) const {
  double u = ccw_distance(start, p);
  return u <= length + slack || u >= kTwoPi - slack;
}

bool OpenArc::contains(Angle p) const {
  double u = ccw_distance(start, p);
  return u > tol_ang() && u < length - tol_ang();
}

std::optional<std::size_t> ArcDecomposition::arc_of(Angle p) const {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].contains(p, tol_ang())) return i;
  }
  return std::nullopt;
}

void check_scale(double r) {
  if (!std::isfinite(r) || r < 0.0) throw ScaleError("scale r must lie in [0, pi)");
  if (r >= kPi) throw ContractibleRegimeError("r >= pi: the thickening is contractible");
}

ArcDecomposition arc_decomposition(std::span<const Angle> points, std::span<const double> masses, double r) {
  if (masses.size() != points.size()) throw ValidationError("one mass per point required");
  check_points(points, r);
  const double tol = tol_ang();

  std::size_t base_idx = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].radians() < points[base_idx].radians()) base_idx = i;
  }
  const Angle base = points[base_idx];

  // Excluded intervals shrunk by tol so that points at distance r + tol survive.
  struct Interval {
    double lo;
    double hi;
  };
  std::vector<Interval> iv;
  const double len = 2.0 * (kPi - r) - 2.0 * tol;
  if (len > 0.0) {
    for (Angle p : points) {
      double s = std::fmod(ccw_distance(base, p) + r + tol, kTwoPi);
      iv.push_back({s, std::min(s + len, kTwoPi)});
    }
  }
  std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const Interval& x : iv) {
    if (!merged.empty() && x.lo < merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, x.hi);
    } else {
      merged.push_back(x);
    }
  }

  ArcDecomposition out;
  out.r = r;
  for (const Interval& m : merged) {
    out.excluded.push_back({rotate(base, m.lo - tol), m.hi - m.lo + 2.0 * tol});
  }

  // Complement components in offsets from base; the first one wraps through base.
  std::vector<Interval> comps;
  if (merged.empty()) {
    comps.push_back({0.0, kTwoPi});
  } else {
    comps.push_back({merged.back().hi - kTwoPi, merged.front().lo});
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) comps.push_back({merged[i].hi, merged[i + 1].lo});
  }

  std::vector<int> comp_of(points.size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    double u = ccw_distance(base, points[i]);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      bool inside = (u >= comps[c].lo - tol && u <= comps[c].hi + tol) ||
                    (c == 0 && u - kTwoPi >= comps[c].lo - tol);
      if (inside) {
        comp_of[i] = static_cast<int>(c);
        break;
      }
    }
    if (comp_of[i] < 0) throw Error("support point fell inside the excluded region");
  }

  std::vector<int> arc_index(comps.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    bool used = std::find(comp_of.begin(), comp_of.end(), static_cast<int>(c)) != comp_of.end();
    if (!used) continue;
    arc_index[c] = static_cast<int>(out.arcs.size());
    Arc a;
    if (merged.empty()) {
      a.start = base;
      a.length = kTwoPi;
    } else {
      a.start = rotate(base, comps[c].lo + tol);
      a.length = std::max(0.0, comps[c].hi - comps[c].lo - 2.0 * tol);
    }
    out.arcs.push_back(a);
  }
  out.atom_arc.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.atom_arc[i] = static_cast<std::size_t>(arc_index[comp_of[i]]);
    out.arcs[out.atom_arc[i]].mass += masses[i];
  }
  return out;
}

ArcDecomposition arc_decomposition(const Measure& mu, double r) {
  std::vector<Angle> pts = mu.support();
  std::vector<double> masses;
  for (const Atom& a : mu.atoms()) masses.push_back(a.mass);
  return arc_decomposition(pts, masses, r);
}

std::vector<OpenArc> excluded_region(const Measure& mu, double r) { return arc_decomposition(mu, r).excluded; }

int arcs_count(const Measure& mu, double r) { return static_cast<int>(arc_decomposition(mu, r).count()); }

int classify(const Measure& mu, double r) { return arcs_count(mu, r) / 2; }

int max_k(double r) {
  check_scale(r);
  // Slack far below tol_ang() so that r = threshold - 1e-9 still falls in the lower stratum.
  constexpr double kBoundarySlack = 1e-12;
  int k = 0;
  while (2.0 * (k + 1) * kPi / (2.0 * (k + 1) + 1.0) <= r + kBoundarySlack) ++k;
  return k;
}

bool alternation_check(std::span<const Angle> blue, double r) {
  check_points(blue, r);
  std::vector<Angle> pts = dedupe(blue);
  std::vector<Colored> all;
  for (Angle p : pts) {
    all.push_back({p.radians(), kBlue});
    all.push_back({antipode(p).radians(), kRed});
  }
  std::sort(all.begin(), all.end(), [](const Colored& a, const Colored& b) { return a.u < b.u; });
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].color == all[(i + 1) % all.size()].color) return false;
  }
  return true;
}

int degree_arc_count(std::span<const Angle> support, double r) {
  check_points(support, r);
  std::vector<Angle> pts = dedupe(support);
  std::vector<Colored> all;
  for (Angle p : pts) {
    all.push_back({p.radians(), kBlue});
    all.push_back({antipode(p).radians(), kRed});
  }
  std::sort(all.begin(), all.end(), [](const Colored& a, const Colored& b) { return a.u < b.u; });

  // f sends blue to 0 and red to pi, rises by pi across mixed gaps and is constant on same-color gaps.
  auto wrap = [](double x) {
    x = std::fmod(x, kTwoPi);
    if (x > kPi) x -= kTwoPi;
    if (x <= -kPi) x += kTwoPi;
    return x;
  };
  double total = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Colored& a = all[i];
    const Colored& b = all[(i + 1) % all.size()];
    double fa = a.color == kBlue ? 0.0 : kPi;
    double rise = a.color == b.color ? 0.0 : kPi;
    constexpr int kSamples = 4;
    double prev = fa;
    for (int s = 1; s <= kSamples; ++s) {
      double cur = fa + rise * s / kSamples;
      total += wrap(cur - prev);
      prev = cur;
    }
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

int max_arcs_extension(std::span<const Angle> support, double r) {
  HalfCircle h = half_circle(support, r);
  int total = h.changes();
  for (std::size_t g = 0; g + 1 < h.pts.size(); ++g) total += 2 * h.capacity(g);
  return total;
}

int max_arcs_extension(const Measure& mu, double r) {
  std::vector<Angle> s = mu.support();
  return max_arcs_extension(s, r);
}

std::vector<Angle> extension_witness(std::span<const Angle> support, double r, int target_arcs) {
  HalfCircle h = half_circle(support, r);
  int arcs = h.changes();
  int best = arcs;
  for (std::size_t g = 0; g + 1 < h.pts.size(); ++g) best += 2 * h.capacity(g);
  if (target_arcs < arcs || target_arcs > best || (target_arcs - arcs) % 2 != 0) {
    throw MembershipError("no extension with " + std::to_string(target_arcs) + " arcs (current " +
                          std::to_string(arcs) + ", maximum " + std::to_string(best) + ")");
  }
  std::vector<Angle> out(support.begin(), support.end());
  int remaining = (target_arcs - arcs) / 2;
  for (std::size_t g = 0; g + 1 < h.pts.size() && remaining > 0; ++g) {
    int m = std::min(h.capacity(g), remaining);
    if (m == 0) continue;
    remaining -= m;
    const Colored& p = h.pts[g];
    bool same = p.color == h.pts[g + 1].color;
    int count = same ? 2 * m - 1 : 2 * m;
    Color c = p.color == kBlue ? kRed : kBlue;
    for (int j = 1; j <= count; ++j) {
      double u = p.u + j * h.d;
      out.push_back(rotate(h.theta, c == kBlue ? u : u + kPi));
      c = c == kBlue ? kRed : kBlue;
    }
  }
  return out;
}

bool in_closure_V(const Measure& mu, int k, double r) {
  if (k < 0) return false;
  int arcs = arcs_count(mu, r);
  return arcs <= 2 * k + 1 && 2 * k + 1 <= max_arcs_extension(mu, r);
}

Measure ArcMassForm::combine() const {
  std::vector<Atom> atoms;
  for (const ArcComponent& c : components) {
    if (c.weight <= 0.0) continue;
    for (const Atom& a : c.part.atoms()) atoms.push_back({a.position, a.mass * c.weight});
  }
  return Measure::from_atoms(std::move(atoms), true);
}

ArcMassForm arc_mass_form(const Measure& mu, int k, double r) {
  if (!in_closure_V(mu, k, r)) {
    throw MembershipError("measure is not in the closure of V_" + std::to_string(2 * k + 1));
  }
  std::vector<Angle> support = mu.support();
  int arcs = arcs_count(mu, r);
  std::vector<Angle> t = arcs == 2 * k + 1 ? support : extension_witness(support, r, 2 * k + 1);
  std::vector<double> masses(t.size(), 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) masses[i] = mu[i].mass;

  ArcDecomposition dec = arc_decomposition(t, masses, r);
  if (dec.count() != static_cast<std::size_t>(2 * k + 1)) throw Error("witness set has the wrong number of arcs");

  ArcMassForm form;
  form.k = k;
  form.r = r;
  form.witness = t;
  for (std::size_t a = 0; a < dec.count(); ++a) {
    std::vector<Atom> part;
    Angle first_point;
    bool have_point = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (dec.atom_arc[i] != a) continue;
      if (!have_point) {
        first_point = t[i];
        have_point = true;
      }
      if (masses[i] > 0.0) part.push_back({t[i], masses[i]});
    }
    ArcComponent comp{part.empty() ? delta(first_point) : Measure::from_atoms(part, true), dec.arcs[a].mass,
                      dec.arcs[a]};
    form.components.push_back(std::move(comp));
  }
  return form;
}

}  // namespace vrm
