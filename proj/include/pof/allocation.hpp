#pragma once

#include <optional>
#include <utility>

#include "pof/domain.hpp"

namespace pof {

struct PofResult {
  Allocation utilitarian;
  Allocation fair;
  Criterion criterion = Criterion::PF;
  double pof = 0.0;  // 1 - fair.total() / utilitarian.total()
};

// Maximizes total utility: greedy fill in order of ascending cost.
std::pair<Allocation, KnapsackBreakdown> solve_utilitarian(
    const BudgetUtilitySet& set);

// u_i = 1/(n c_i), valid only when every c_i > 0 and c_i L_i >= 1/n.
// Returns nullopt when those conditions fail.
std::optional<Allocation> solve_pf_closed_form(const BudgetUtilitySet& set);

// General proportional-fair solver: maximizes sum_i log u_i by water-filling
// u_i = min(L_i, 1/(lambda c_i)) with lambda found by bisection so the budget
// binds to within tol. Throws ToleranceNotReached if bisection stalls.
Allocation solve_pf_waterfill(const BudgetUtilitySet& set, double tol = 1e-12);

// Closed form when applicable, water-filling otherwise.
Allocation solve_pf(const BudgetUtilitySet& set, double tol = 1e-12);

// Max-min fair: lexicographic maximization of the sorted ratios u_i / L_i.
// With a single budget constraint: u_i = phi * L_i for c_i > 0 with
// phi = min(1, 1 / sum_i c_i L_i), and u_i = L_i for c_i = 0.
Allocation solve_mmf(const BudgetUtilitySet& set);

PofResult compute_pof(const BudgetUtilitySet& set, Criterion criterion,
                      double tol = 1e-12);

}  // namespace pof
