#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pof/errors.hpp"

namespace pof {

enum class Criterion { PF, MMF };

const char* to_string(Criterion c);
Criterion criterion_from_string(std::string_view s);  // throws InvalidParams

// Per-player maximum achievable utilities L, all positive, n >= 2.
struct UtilityLimits {
  std::vector<double> values;

  std::size_t n() const { return values.size(); }
  double total() const;

  static UtilityLimits equal(std::size_t n);  // L = (1, ..., 1)
};

// Throws unless every limit is finite and positive and n >= 2.
void validate_limits(const UtilityLimits& limits);

// Returns the limits sorted non-increasing plus the permutation used:
// perm[i] is the original index of sorted entry i. Stable for ties.
std::pair<UtilityLimits, std::vector<std::size_t>> sorted_descending(
    const UtilityLimits& limits);

// The budget utility set {u : 0 <= u_i <= L_i, sum_i c_i u_i <= 1}.
struct BudgetUtilitySet {
  UtilityLimits limits;
  std::vector<double> costs;

  std::size_t n() const { return limits.n(); }
  double budget_weight() const;  // sum_i c_i L_i
};

// Validates and assembles an instance. Exact comparisons, no tolerance.
BudgetUtilitySet validate_instance(const UtilityLimits& limits,
                                   const std::vector<double>& costs);

struct Allocation {
  std::vector<double> utilities;

  double total() const;  // recomputed on demand, never cached
};

// Box and budget feasibility within an absolute tolerance.
bool is_feasible(const BudgetUtilitySet& set, const Allocation& alloc,
                 double tol = 1e-9);

// Structure of the total-utility optimum: serve players in order of
// ascending cost, fully through split_index of them, then a fraction of
// the next one.
struct KnapsackBreakdown {
  std::vector<std::size_t> order;  // position -> player, costs ascending, stable
  std::size_t split_index = 0;     // number of fully served players
  double fraction = 0.0;           // fill of the next player, in [0, 1)
  double optimal_total = 0.0;
};

// A computed POF upper bound plus the case analysis that produced it.
struct BoundReport {
  double bound = 0.0;
  Criterion criterion = Criterion::PF;
  std::string case_tag;
  std::optional<std::size_t> l_star;
  std::map<std::string, double> aux;
  std::vector<std::size_t> permutation;  // sorted index -> original index
  // MMF only: regime (0, 1 or 2) of each candidate split l = 1..n-1.
  std::vector<int> s_membership;
};

}  // namespace pof
