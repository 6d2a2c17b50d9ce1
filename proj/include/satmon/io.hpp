#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "satmon/ideal.hpp"
#include "satmon/saturation.hpp"

namespace satmon {

/// {"n": int, "gens": [[a1,...,an], ...]}; input generators need not be
/// minimal, parsing minimalizes.
nlohmann::json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SaturationReport& report);

/// Resolves an ideal argument: a path to a JSON file, inline JSON (starting
/// with '{'), or inline generator text (requires n, inferred from the
/// largest variable index when absent).
MonomialIdeal load_ideal(const std::string& arg, std::optional<int> n);

/// Largest variable index mentioned in generator text; 1 for "0"/"1".
int infer_dimension(const std::string& text);

} // namespace satmon
