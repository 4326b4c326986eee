#include "pof/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pof {

const char* to_string(Criterion c) {
  return c == Criterion::PF ? "pf" : "mmf";
}

Criterion criterion_from_string(std::string_view s) {
  if (s == "pf" || s == "PF") return Criterion::PF;
  if (s == "mmf" || s == "MMF") return Criterion::MMF;
  throw InvalidParams("unknown criterion: " + std::string(s));
}

double UtilityLimits::total() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

UtilityLimits UtilityLimits::equal(std::size_t n) {
  return UtilityLimits{std::vector<double>(n, 1.0)};
}

void validate_limits(const UtilityLimits& limits) {
  if (limits.n() < 2)
    throw InvalidN("need at least 2 players, got " + std::to_string(limits.n()));
  for (double v : limits.values) {
    if (!std::isfinite(v) || v <= 0.0)
      throw NonPositiveLimit("every utility limit must be finite and positive");
  }
}

std::pair<UtilityLimits, std::vector<std::size_t>> sorted_descending(
    const UtilityLimits& limits) {
  validate_limits(limits);
  std::vector<std::size_t> perm(limits.n());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return limits.values[a] > limits.values[b];
  });
  UtilityLimits sorted;
  sorted.values.reserve(limits.n());
  for (std::size_t i : perm) sorted.values.push_back(limits.values[i]);
  return {std::move(sorted), std::move(perm)};
}

double BudgetUtilitySet::budget_weight() const {
  double s = 0.0;
  for (std::size_t i = 0; i < costs.size(); ++i) s += costs[i] * limits.values[i];
  return s;
}

BudgetUtilitySet validate_instance(const UtilityLimits& limits,
                                   const std::vector<double>& costs) {
  if (limits.n() != costs.size())
    throw LengthMismatch("limits have " + std::to_string(limits.n()) +
                         " entries but costs have " + std::to_string(costs.size()));
  validate_limits(limits);
  for (double c : costs) {
    if (!std::isfinite(c) || c < 0.0)
      throw NegativeCost("every cost must be finite and nonnegative");
  }
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (costs[i] * limits.values[i] > 1.0)
      throw UnachievableMaximum("player " + std::to_string(i) +
                                " cannot afford its own maximum: c*L = " +
                                std::to_string(costs[i] * limits.values[i]));
  }
  return BudgetUtilitySet{limits, costs};
}

double Allocation::total() const {
  return std::accumulate(utilities.begin(), utilities.end(), 0.0);
}

bool is_feasible(const BudgetUtilitySet& set, const Allocation& alloc, double tol) {
  if (alloc.utilities.size() != set.n()) return false;
  double spent = 0.0;
  for (std::size_t i = 0; i < set.n(); ++i) {
    double u = alloc.utilities[i];
    if (!(u >= -tol) || !(u <= set.limits.values[i] + tol)) return false;
    spent += set.costs[i] * u;
  }
  return spent <= 1.0 + tol;
}

}  // namespace pof
