#pragma once

#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "vrm/arcs.hpp"
#include "vrm/measure.hpp"
#include "vrm/persistence.hpp"
#include "vrm/quotient.hpp"

namespace vrm {

using json = nlohmann::json;

json to_json(const Measure& mu);
// Reads {"atoms":[{"angle":..,"mass":..}]}; angles are converted from degrees when asked.
Measure measure_from_json(const json& j, bool degrees = false, bool normalize = false);
Measure parse_measure(const std::string& text, bool degrees = false, bool normalize = false);

json to_json(const ArcDecomposition& d);
json to_json(const RegularPolygonalMeasure& p);
json to_json(std::span<const Bar> bars);
std::vector<Bar> bars_from_json(const json& j);
json to_json(const BarcodeComparison& c);
std::string comparison_table(const BarcodeComparison& c);

json trajectory_json(std::span<const Measure> frames);
std::string trajectory_csv(std::span<const Measure> frames);

// Shortest decimal text that round-trips the double.
std::string format_real(double x);

}  // namespace vrm
