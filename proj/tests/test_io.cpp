#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pof/bounds.hpp"
#include "pof/io.hpp"
#include "pof/worstcase.hpp"

using namespace pof;

TEST_CASE("limits json round-trips bit-exact through text") {
  UtilityLimits limits{{1.0 / 3.0, 0.7320508075688772, 2.5}};
  nlohmann::json j = nlohmann::json::parse(limits_to_json(limits).dump());
  CHECK(limits_from_json(j).values == limits.values);
}

TEST_CASE("instance json round-trips bit-exact through text") {
  // Both constructions produce costs like 1/0.6 whose 12-digit rounding
  // would land above the player's budget cap and fail validation.
  BudgetUtilitySet mmf = construct_mmf_worstcase(UtilityLimits{{1.0, 0.6, 0.25}});
  nlohmann::json j = nlohmann::json::parse(instance_to_json(mmf).dump());
  BudgetUtilitySet back = instance_from_json(j);
  CHECK(back.costs == mmf.costs);
  CHECK(back.limits.values == mmf.limits.values);

  BudgetUtilitySet pf = construct_pf_worstcase_unequal(UtilityLimits{{1.0, 0.9}});
  nlohmann::json k = nlohmann::json::parse(instance_to_json(pf).dump());
  CHECK(instance_from_json(k).costs == pf.costs);
}

TEST_CASE("allocation json rounds to twelve significant digits") {
  Allocation alloc{{0.0669872981077807, 0.5}};
  nlohmann::json j = allocation_to_json(alloc);
  CHECK(j.at("u")[0].get<double>() == 0.0669872981078);
  CHECK(j.at("u")[1].get<double>() == 0.5);
  CHECK(std::abs(j.at("total").get<double>() - 0.566987298108) < 1e-15);
}

TEST_CASE("bound report json mirrors the optional fields") {
  nlohmann::json with = bound_report_to_json(
      mmf_bound_unequal(UtilityLimits{{1.0, 0.25}}));
  CHECK(with.at("l_star") == 1);
  CHECK(with.at("s_membership") == nlohmann::json::array({2}));
  CHECK(with.at("bound") == 0.375);

  BoundReport bare;
  bare.case_tag = "none";
  nlohmann::json without = bound_report_to_json(bare);
  CHECK(without.at("l_star").is_null());
  CHECK(!without.contains("s_membership"));
}

TEST_CASE("tightness report json embeds a re-parseable instance") {
  TightnessReport report =
      verify_tightness(UtilityLimits{{1.0, 0.9, 0.8}}, Criterion::PF, 1e-8);
  nlohmann::json j = nlohmann::json::parse(tightness_report_to_json(report).dump());
  CHECK(j.at("pass").get<bool>());
  BudgetUtilitySet parsed = instance_from_json(j.at("instance"));
  CHECK(parsed.costs == report.instance.costs);
}

TEST_CASE("file io reports unusable paths") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "pof_io_test.txt";
  write_file(path.string(), "payload\n");
  CHECK(read_file(path.string()) == "payload\n");
  fs::remove(path);
  CHECK_THROWS_AS(read_file(path.string()), std::runtime_error);
  CHECK_THROWS_AS(write_file((path / "nested").string(), "x"),
                  std::runtime_error);
}
