#pragma once

// JSON and CSV serialization. Rationals travel as "p/q" strings so
// files round-trip exactly; sampled (irrational) bag sizes are written
// as decimals with 15 significant digits.

#include "srs/adversary.hpp"
#include "srs/core.hpp"

#include "json.hpp"

#include <string>

namespace srs::io {

using json = nlohmann::json;

std::string decimal15(double v);

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);

json config_to_json(const SpeedConfig& cfg);
SpeedConfig config_from_json(const json& j);

json profile_to_json(const BagProfile& bags);
json profile_to_json(const SampledProfile& bags);  // decimal sizes
BagProfile profile_from_json(const json& j);

template <class T>
json report_to_json(const adversary::RobustnessReport<T>& report);

// One row per configuration: speeds, alg, opt, ratio (exact), ratio as
// a double.
template <class T>
std::string report_to_csv(const adversary::RobustnessReport<T>& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace srs::io
