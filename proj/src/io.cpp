#include "pof/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pof/format.hpp"

namespace pof {

namespace {

nlohmann::json rounded_array(const std::vector<double>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (double v : values) arr.push_back(round_sig12(v));
  return arr;
}

}  // namespace

// Limits and instances are interchange formats: they must re-parse to the
// exact same doubles (12-digit rounding of a cost can push c*L above 1), so
// their arrays are serialized at full round-trip precision.
nlohmann::json limits_to_json(const UtilityLimits& limits) {
  return {{"L", limits.values}};
}

UtilityLimits limits_from_json(const nlohmann::json& j) {
  UtilityLimits limits{j.at("L").get<std::vector<double>>()};
  validate_limits(limits);
  return limits;
}

nlohmann::json instance_to_json(const BudgetUtilitySet& set) {
  return {{"L", set.limits.values}, {"c", set.costs}};
}

BudgetUtilitySet instance_from_json(const nlohmann::json& j) {
  UtilityLimits limits{j.at("L").get<std::vector<double>>()};
  return validate_instance(limits, j.at("c").get<std::vector<double>>());
}

nlohmann::json allocation_to_json(const Allocation& alloc) {
  return {{"u", rounded_array(alloc.utilities)},
          {"total", round_sig12(alloc.total())}};
}

nlohmann::json bound_report_to_json(const BoundReport& report) {
  nlohmann::json aux = nlohmann::json::object();
  for (const auto& [name, value] : report.aux) aux[name] = round_sig12(value);
  nlohmann::json j{{"bound", round_sig12(report.bound)},
                   {"criterion", to_string(report.criterion)},
                   {"case_tag", report.case_tag},
                   {"aux", aux},
                   {"permutation", report.permutation}};
  if (report.l_star)
    j["l_star"] = *report.l_star;
  else
    j["l_star"] = nullptr;
  if (!report.s_membership.empty()) j["s_membership"] = report.s_membership;
  return j;
}

nlohmann::json tightness_report_to_json(const TightnessReport& report) {
  return {{"criterion", to_string(report.criterion)},
          {"bound", round_sig12(report.bound)},
          {"achieved_pof", round_sig12(report.achieved_pof)},
          {"gap", round_sig12(report.gap)},
          {"pass", report.pass},
          {"case_tag", report.case_tag},
          {"instance", instance_to_json(report.instance)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace pof
