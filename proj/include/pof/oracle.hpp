#pragma once

#include <cstdint>
#include <vector>

#include "pof/domain.hpp"

namespace pof {

// Brute-force estimates of the tight bounds for n in {2, 3}: minimize the
// fair-to-optimal utility ratio over a lattice of cost vectors, refining the
// lattice around the incumbent. Independent of the closed-form bound code;
// used to cross-check it. Throws UnsupportedN for n > 3 and InvalidParams
// for coarse_steps < 50 or refine_rounds < 0.
double grid_min_pf_bound(const UtilityLimits& limits, int coarse_steps,
                         int refine_rounds);
double grid_min_mmf_bound(const UtilityLimits& limits, int coarse_steps,
                          int refine_rounds);

// Deterministic sample of feasible allocations: uniform in the box, scaled
// back inside the budget when it overshoots, and pushed out to the budget
// boundary for a fixed fraction of the draws so boundary behavior is covered.
std::vector<Allocation> random_feasible_points(const BudgetUtilitySet& set,
                                               std::size_t count,
                                               std::uint64_t seed);

// Falsification check for max-min optimality: fails iff some sampled feasible
// point's sorted ratio vector lexicographically exceeds the candidate's by
// more than 1e-9 in the first differing component.
bool lex_dominance_check(const BudgetUtilitySet& set, const Allocation& candidate,
                         std::size_t trials, std::uint64_t seed);

}  // namespace pof
