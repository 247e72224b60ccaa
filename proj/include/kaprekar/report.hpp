#pragma once

// JSON and CSV forms of oracle census reports.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "kaprekar/oracle.hpp"

namespace kaprekar {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const ClassLabel& label);
ClassLabel label_from_json(const Json& j);

Json to_json(const SurveyReport& report);
SurveyReport survey_from_json(const Json& j);

/// {schema_version, command, parameters, results}
Json envelope(const std::string& command, Json parameters, Json results);

/// "k0=1;k1=2"
std::string format_params(const FamilyParams& params);

/// Header row followed by one row per cycle.
void write_csv(std::ostream& out, const SurveyReport& report);

}  // namespace kaprekar
