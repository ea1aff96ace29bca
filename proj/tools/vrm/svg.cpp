#include "svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "vrm/arcs.hpp"

namespace vrm::cli {

namespace {

constexpr double kRadius = 100.0;
constexpr double kPanel = 260.0;

struct Point {
  double x;
  double y;
};

Point on_circle(Point c, double radius, double angle) {
  return {c.x + radius * std::cos(angle), c.y - radius * std::sin(angle)};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string arc_path(Point c, double radius, double start, double length) {
  if (length >= kTwoPi - 1e-9) {
    Point a = on_circle(c, radius, start);
    Point b = on_circle(c, radius, start + kPi);
    return "M " + num(a.x) + " " + num(a.y) + " A " + num(radius) + " " + num(radius) + " 0 1 0 " + num(b.x) + " " +
           num(b.y) + " A " + num(radius) + " " + num(radius) + " 0 1 0 " + num(a.x) + " " + num(a.y);
  }
  Point a = on_circle(c, radius, start);
  Point b = on_circle(c, radius, start + length);
  return "M " + num(a.x) + " " + num(a.y) + " A " + num(radius) + " " + num(radius) + " 0 " +
         (length > kPi ? "1" : "0") + " 0 " + num(b.x) + " " + num(b.y);
}

}  // namespace

std::string collapse_svg(std::span<const Measure> frames, std::span<const double> times, double r) {
  std::ostringstream os;
  double width = kPanel * static_cast<double>(frames.size());
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(kPanel + 30)
     << "\" viewBox=\"0 0 " << num(width) << " " << num(kPanel + 30) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t f = 0; f < frames.size(); ++f) {
    Point c{kPanel * (static_cast<double>(f) + 0.5), kPanel / 2.0};
    const Measure& mu = frames[f];
    ArcDecomposition dec = arc_decomposition(mu, r);
    os << "<g>\n";
    os << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(kRadius)
       << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";
    for (const OpenArc& e : dec.excluded) {
      os << "<path d=\"" << arc_path(c, kRadius, e.start.radians(), e.length)
         << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"14\" stroke-opacity=\"0.6\"/>\n";
    }
    for (const Arc& a : dec.arcs) {
      if (a.length > 1e-6) {
        os << "<path d=\"" << arc_path(c, kRadius, a.start.radians(), a.length)
           << "\" fill=\"none\" stroke=\"#2b6cb0\" stroke-width=\"6\" stroke-linecap=\"round\"/>\n";
      } else {
        Point p = on_circle(c, kRadius, a.start.radians());
        os << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
           << "\" r=\"3\" fill=\"#2b6cb0\"/>\n";
      }
    }
    for (const Atom& a : mu.atoms()) {
      Point p = on_circle(c, kRadius, a.position.radians());
      os << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(18.0 * std::sqrt(a.mass))
         << "\" fill=\"#c53030\" fill-opacity=\"0.75\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
    double t = f < times.size() ? times[f] : 0.0;
    os << "<text x=\"" << num(c.x) << "\" y=\"" << num(kPanel + 15) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"14\">t = " << num(t) << "</text>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace vrm::cli
