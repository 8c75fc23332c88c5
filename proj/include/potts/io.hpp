#pragma once

// JSON encodings used by the command-line tool. Energies and couplings are
// written as exact fraction strings ("-9/2").

#include <string>
#include <string_view>

#include "json.hpp"
#include "potts/configuration.hpp"
#include "potts/ground.hpp"
#include "potts/peierls.hpp"

namespace potts {

using nlohmann::json;

/// {"k": int, "center": int, "leaves": [int, ...]}.
json ball_to_json(const BallConfig& b);
/// Throws std::invalid_argument on a leaf count other than k+1 or bad spins.
BallConfig ball_from_json(const json& j);

json signature_to_json(const ClassSignature& s);

/// "const:<spin>" or "periodic:<id>".
std::string background_to_string(const Background& bg);
/// Periodic ids must carry k+2 digits in 1..4.
Background background_from_string(std::string_view text, int k);

/// {"background": ..., "overrides": [{"word": "1 2", "spin": 2}, ...]}.
json configuration_to_json(const FiniteConfiguration& c);
FiniteConfiguration configuration_from_json(const json& j, int k);

json periodic_to_json(const PeriodicGroundState& p);
json extension_report_to_json(const ExtensionReport& r);
json ground_state_set_to_json(const GroundStateSet& g);
json region_fan_to_json(const RegionFan& fan);
json peierls_report_to_json(const PeierlsReport& r);

/// "3" or "2+5"; "ALL" when every signature is listed.
std::string orbit_label(const std::vector<ClassSignature>& minimizers, int k);

}  // namespace potts
