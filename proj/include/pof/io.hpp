#pragma once

#include <string>

#include "json.hpp"
#include "pof/allocation.hpp"
#include "pof/domain.hpp"
#include "pof/worstcase.hpp"

namespace pof {

// On-disk schemas. Limits file: {"L": [number,...]}. Instance file adds the
// cost vector: {"L": [number,...], "c": [number,...]}. Parsers validate the
// decoded vectors and throw the domain errors; serializers round every
// number to 12 significant digits first.

nlohmann::json limits_to_json(const UtilityLimits& limits);
UtilityLimits limits_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const BudgetUtilitySet& set);
BudgetUtilitySet instance_from_json(const nlohmann::json& j);

nlohmann::json allocation_to_json(const Allocation& alloc);

nlohmann::json bound_report_to_json(const BoundReport& report);

nlohmann::json tightness_report_to_json(const TightnessReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pof
