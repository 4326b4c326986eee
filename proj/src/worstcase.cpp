#include "pof/worstcase.hpp"

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "pof/allocation.hpp"

namespace pof {

namespace {

// Largest cost not exceeding the player's budget cap under rounding.
double cap_cost(double c, double limit) {
  while (c * limit > 1.0) c = std::nextafter(c, 0.0);
  return c;
}

BudgetUtilitySet assemble(const UtilityLimits& limits,
                          const std::vector<std::size_t>& perm,
                          const std::vector<double>& sorted_costs) {
  std::vector<double> costs(sorted_costs.size());
  for (std::size_t i = 0; i < sorted_costs.size(); ++i)
    costs[perm[i]] = cap_cost(sorted_costs[i], limits.values[perm[i]]);
  return validate_instance(limits, costs);
}

}  // namespace

BudgetUtilitySet construct_pf_worstcase_equal(std::size_t n) {
  if (n < 2) throw InvalidN("need at least 2 players, got " + std::to_string(n));
  UtilityLimits limits = UtilityLimits::equal(n);
  std::vector<double> costs(n, 1.0);
  if (n == 2) {
    costs[0] = std::sqrt(3.0) - 1.0;
  } else {
    BoundReport report = pf_bound_equal(n);
    auto m = static_cast<std::size_t>(report.aux.at("m"));
    for (std::size_t i = 0; i < m; ++i) costs[i] = 1.0 / static_cast<double>(m);
  }
  return validate_instance(limits, costs);
}

BudgetUtilitySet construct_pf_worstcase_unequal(const UtilityLimits& limits) {
  PfUnequalAnalysis an = analyze_pf_unequal(limits);
  const std::size_t n = an.sorted.size();
  std::vector<double> costs(n);
  if (an.case1 || !an.ytilde_wins) {
    for (std::size_t i = 0; i < an.l_star; ++i)
      costs[i] = an.y_star / std::sqrt(an.sorted[i]);
    for (std::size_t i = an.l_star; i < n; ++i) costs[i] = 1.0 / an.sorted[i];
  } else {
    costs[0] = an.y_tilde / std::sqrt(an.sorted[0]);
    for (std::size_t i = 1; i < n; ++i) costs[i] = 1.0 / an.sorted[i];
  }
  return assemble(limits, an.perm, costs);
}

BudgetUtilitySet construct_mmf_worstcase(const UtilityLimits& limits) {
  MmfAnalysis an = analyze_mmf(limits);
  const std::size_t n = an.sorted.size();
  std::vector<double> costs(n);
  for (std::size_t i = 0; i < an.l_star; ++i)
    costs[i] = an.Y / (static_cast<double>(an.l_star) * an.sorted[i]);
  for (std::size_t i = an.l_star; i < n; ++i) costs[i] = 1.0 / an.sorted[i];
  return assemble(limits, an.perm, costs);
}

TightnessReport verify_tightness(const UtilityLimits& limits, Criterion criterion,
                                 double tol) {
  if (!(tol > 0.0)) throw InvalidParams("tolerance must be positive");
  TightnessReport report;
  report.criterion = criterion;
  BoundReport bound = criterion == Criterion::PF ? pf_bound_unequal(limits)
                                                 : mmf_bound_unequal(limits);
  report.bound = bound.bound;
  report.case_tag = bound.case_tag;
  report.instance = criterion == Criterion::PF ? construct_pf_worstcase_unequal(limits)
                                               : construct_mmf_worstcase(limits);
  report.achieved_pof = compute_pof(report.instance, criterion).pof;
  report.gap = std::abs(report.bound - report.achieved_pof);
  report.pass = report.gap <= tol;
  return report;
}

}  // namespace pof
