#include "pof/allocation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace pof {

std::pair<Allocation, KnapsackBreakdown> solve_utilitarian(
    const BudgetUtilitySet& set) {
  const std::size_t n = set.n();
  const auto& L = set.limits.values;
  const auto& c = set.costs;

  KnapsackBreakdown kb;
  kb.order.resize(n);
  std::iota(kb.order.begin(), kb.order.end(), std::size_t{0});
  std::stable_sort(kb.order.begin(), kb.order.end(),
                   [&](std::size_t a, std::size_t b) { return c[a] < c[b]; });

  // Largest prefix whose full service fits the budget. Terms are nonnegative,
  // so the first overflow ends the prefix.
  double spent = 0.0;
  std::size_t l = 0;
  while (l < n) {
    double term = c[kb.order[l]] * L[kb.order[l]];
    if (spent + term > 1.0) break;
    spent += term;
    ++l;
  }
  kb.split_index = l;

  Allocation alloc;
  alloc.utilities.assign(n, 0.0);
  for (std::size_t i = 0; i < l; ++i) alloc.utilities[kb.order[i]] = L[kb.order[i]];
  if (l < n) {
    std::size_t next = kb.order[l];
    kb.fraction = (1.0 - spent) / (c[next] * L[next]);
    alloc.utilities[next] = kb.fraction * L[next];
  } else {
    kb.fraction = 0.0;
  }
  kb.optimal_total = alloc.total();
  return {std::move(alloc), std::move(kb)};
}

std::optional<Allocation> solve_pf_closed_form(const BudgetUtilitySet& set) {
  const std::size_t n = set.n();
  const auto& L = set.limits.values;
  const auto& c = set.costs;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(c[i] > 0.0)) return std::nullopt;
    if (!(static_cast<double>(n) * c[i] * L[i] >= 1.0)) return std::nullopt;
  }
  Allocation alloc;
  alloc.utilities.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    alloc.utilities[i] = 1.0 / (static_cast<double>(n) * c[i]);
  return alloc;
}

Allocation solve_pf_waterfill(const BudgetUtilitySet& set, double tol) {
  if (!(tol > 0.0)) throw InvalidParams("tolerance must be positive");
  const std::size_t n = set.n();
  const auto& L = set.limits.values;
  const auto& c = set.costs;

  Allocation alloc;
  alloc.utilities.resize(n);

  if (set.budget_weight() <= 1.0) {
    alloc.utilities = L;
    return alloc;
  }

  // Zero-cost players never compete for budget; pin them at their maximum so
  // the residual g is strictly decreasing over the active region.
  std::vector<double> w;  // c_i * L_i over positive-cost players
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (c[i] > 0.0) w.push_back(c[i] * L[i]);

  auto g = [&](double lambda) {
    double s = 0.0;
    for (double wi : w) s += std::min(wi, 1.0 / lambda);
    return s;
  };

  double lo = 1.0, hi = 1.0;
  double g1 = g(1.0);
  if (g1 > 1.0) {
    int it = 0;
    while (g(hi) > 1.0) {
      hi *= 2.0;
      if (++it > 200) throw ToleranceNotReached("failed to bracket the budget multiplier");
    }
    lo = hi / 2.0;
  } else if (g1 < 1.0) {
    int it = 0;
    while (g(lo) < 1.0) {
      lo /= 2.0;
      if (++it > 200) throw ToleranceNotReached("failed to bracket the budget multiplier");
    }
    hi = lo * 2.0;
  }

  double lambda = 1.0;
  if (g1 != 1.0) {
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      lambda = 0.5 * (lo + hi);
      double r = g(lambda) - 1.0;
      if (std::abs(r) <= tol) {
        converged = true;
        break;
      }
      if (r > 0.0)
        lo = lambda;
      else
        hi = lambda;
    }
    if (!converged)
      throw ToleranceNotReached("bisection did not reach the requested tolerance");
  }

  for (std::size_t i = 0; i < n; ++i)
    alloc.utilities[i] = c[i] > 0.0 ? std::min(L[i], 1.0 / (lambda * c[i])) : L[i];
  return alloc;
}

Allocation solve_pf(const BudgetUtilitySet& set, double tol) {
  if (auto closed = solve_pf_closed_form(set)) return *std::move(closed);
  return solve_pf_waterfill(set, tol);
}

Allocation solve_mmf(const BudgetUtilitySet& set) {
  const std::size_t n = set.n();
  const auto& L = set.limits.values;
  const auto& c = set.costs;
  double weight = set.budget_weight();
  double phi = weight <= 1.0 ? 1.0 : 1.0 / weight;
  Allocation alloc;
  alloc.utilities.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    alloc.utilities[i] = c[i] > 0.0 ? phi * L[i] : L[i];
  return alloc;
}

PofResult compute_pof(const BudgetUtilitySet& set, Criterion criterion, double tol) {
  PofResult result;
  result.criterion = criterion;
  result.utilitarian = solve_utilitarian(set).first;
  result.fair = criterion == Criterion::PF ? solve_pf(set, tol) : solve_mmf(set);
  double best = result.utilitarian.total();
  assert(best > 0.0);
  result.pof = 1.0 - result.fair.total() / best;
  return result;
}

}  // namespace pof
