#include "vrm/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "vrm/errors.hpp"

namespace vrm {

namespace {

json bar_json(const Bar& b) {
  json death = b.infinite() ? json("inf") : json(b.death);
  return {{"dim", b.dim}, {"birth", b.birth}, {"death", death}};
}

std::string bar_text(const Bar& b) {
  return "[" + format_real(b.birth) + ", " + (b.infinite() ? std::string("inf") : format_real(b.death)) + ")";
}

}  // namespace

std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json to_json(const Measure& mu) {
  json atoms = json::array();
  for (const Atom& a : mu.atoms()) atoms.push_back({{"angle", a.position.radians()}, {"mass", a.mass}});
  return {{"atoms", atoms}};
}

Measure measure_from_json(const json& j, bool degrees, bool normalize) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) {
    throw ValidationError("measure JSON needs an \"atoms\" array");
  }
  std::vector<std::pair<double, double>> pairs;
  for (const json& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("angle") || !a.contains("mass") || !a["angle"].is_number() ||
        !a["mass"].is_number()) {
      throw ValidationError("each atom needs numeric \"angle\" and \"mass\"");
    }
    double angle = a["angle"].get<double>();
    if (degrees) angle = angle * kPi / 180.0;
    pairs.emplace_back(angle, a["mass"].get<double>());
  }
  return make_measure(pairs, normalize);
}

Measure parse_measure(const std::string& text, bool degrees, bool normalize) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return measure_from_json(j, degrees, normalize);
}

json to_json(const ArcDecomposition& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs) arcs.push_back({{"start", a.start.radians()}, {"length", a.length}, {"mass", a.mass}});
  json excluded = json::array();
  for (const OpenArc& e : d.excluded) excluded.push_back({{"start", e.start.radians()}, {"length", e.length}});
  return {{"r", d.r}, {"arcs", arcs}, {"excluded", excluded}};
}

json to_json(const RegularPolygonalMeasure& p) { return {{"k", p.k}, {"phase", p.phase}, {"masses", p.masses}}; }

json to_json(std::span<const Bar> bars) {
  json out = json::array();
  for (const Bar& b : bars) out.push_back(bar_json(b));
  return out;
}

std::vector<Bar> bars_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("barcode JSON must be an array");
  std::vector<Bar> bars;
  for (const json& b : j) {
    Bar bar;
    bar.dim = b.at("dim").get<int>();
    bar.birth = b.at("birth").get<double>();
    const json& death = b.at("death");
    bar.death = death.is_string() && death.get<std::string>() == "inf" ? kInfinity : death.get<double>();
    bars.push_back(bar);
  }
  return bars;
}

json to_json(const BarcodeComparison& c) {
  json matched = json::array();
  for (const MatchedBar& m : c.matched) {
    matched.push_back({{"computed", bar_json(m.computed)},
                       {"theoretical", bar_json(m.theoretical)},
                       {"birth_error", m.birth_error},
                       {"death_error", m.death_error}});
  }
  json uc = json::array();
  for (const Bar& b : c.unmatched_computed) uc.push_back(bar_json(b));
  json ut = json::array();
  for (const Bar& b : c.unmatched_theoretical) ut.push_back(bar_json(b));
  return {{"tol", c.tol},
          {"matched", matched},
          {"unmatched_computed", uc},
          {"unmatched_theoretical", ut},
          {"within_tolerance", c.within_tolerance()}};
}

std::string comparison_table(const BarcodeComparison& c) {
  std::ostringstream os;
  os << "dim  computed                                   theoretical                                birth_err  death_err\n";
  for (const MatchedBar& m : c.matched) {
    std::string comp = bar_text(m.computed);
    std::string theo = bar_text(m.theoretical);
    os << m.computed.dim << std::string(5 - std::to_string(m.computed.dim).size(), ' ') << comp
       << std::string(comp.size() < 43 ? 43 - comp.size() : 1, ' ') << theo
       << std::string(theo.size() < 43 ? 43 - theo.size() : 1, ' ') << format_real(m.birth_error) << "  "
       << format_real(m.death_error) << "\n";
  }
  for (const Bar& b : c.unmatched_computed) os << "unmatched computed    dim " << b.dim << " " << bar_text(b) << "\n";
  for (const Bar& b : c.unmatched_theoretical) os << "unmatched theoretical dim " << b.dim << " " << bar_text(b) << "\n";
  os << "tolerance " << format_real(c.tol) << ": " << (c.within_tolerance() ? "agree" : "disagree") << "\n";
  return os.str();
}

json trajectory_json(std::span<const Measure> frames) {
  json out = json::array();
  for (std::size_t i = 0; i < frames.size(); ++i) {
    double t = frames.size() > 1 ? static_cast<double>(i) / static_cast<double>(frames.size() - 1) : 0.0;
    json f = to_json(frames[i]);
    f["frame"] = i;
    f["t"] = t;
    out.push_back(f);
  }
  return out;
}

std::string trajectory_csv(std::span<const Measure> frames) {
  std::ostringstream os;
  os << "frame,t,atom_angle,atom_mass\n";
  for (std::size_t i = 0; i < frames.size(); ++i) {
    double t = frames.size() > 1 ? static_cast<double>(i) / static_cast<double>(frames.size() - 1) : 0.0;
    for (const Atom& a : frames[i].atoms()) {
      os << i << ',' << format_real(t) << ',' << format_real(a.position.radians()) << ',' << format_real(a.mass)
         << "\n";
    }
  }
  return os.str();
}

}  // namespace vrm
