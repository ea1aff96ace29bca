#pragma once

#include <span>
#include <string>

#include "vrm/measure.hpp"

namespace vrm::cli {

// Frames side by side: circle, excluded region shaded, arcs as bands, atoms as disks with area
// proportional to mass.
std::string collapse_svg(std::span<const Measure> frames, std::span<const double> times, double r);

}  // namespace vrm::cli
