#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "krull/analysis.hpp"

namespace krull {

// Serialized form of a Value: "inf", or the component list as rational
// strings, e.g. ["0", "-1/5"].
//
// Report layout (schema_version 1):
//
//     schema_version, polynomial, domain, valuation, degree, stripped_z_power,
//     coefficient_values, theorem1, corollary1_agrees, theorem2,
//     theorem2_status, theorem2_note, verdict, newton_polygon
//
// theorem1 and theorem2 are null when no index qualifies. Orderings are
// written as "less", "equal" or "greater".
std::string to_json(const AnalysisReport& report, int indent = -1);

// Human-readable report. Numeric fields appear as key=value tokens with the
// same spelling as the JSON values. `all_pairs` lists every qualifying
// (j, k) of the upper-bound criterion.
std::string to_text(const AnalysisReport& report, bool all_pairs = false);

// Problems found when checking `json` against the report schema; empty
// means valid.
std::vector<std::string> validate_report_json(std::string_view json);

// Record for a line that could not be analyzed.
std::string error_json(std::size_t line, std::string_view input, std::string_view message);

}  // namespace krull
