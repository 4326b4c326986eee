#pragma once

#include <cstddef>
#include <vector>

#include "pof/domain.hpp"

namespace pof {

// Prefix aggregates of a non-increasing limit vector, indexed by prefix
// length l = 0..n: A[l] = sum_{i<=l} sqrt(L_i), M[l] = sum_{i<=l} L_i,
// and B[l] = sum_{i>=l+2} L_i for l = 0..n-1.
struct PrefixAggregates {
  std::vector<double> A;
  std::vector<double> M;
  std::vector<double> B;

  double total() const { return M.back(); }
};

PrefixAggregates prefix_aggregates(const std::vector<double>& sorted_desc);

// Tight POF upper bound for proportional fairness with equal limits.
BoundReport pf_bound_equal(std::size_t n);

// Tight PF bound for arbitrary positive limits (sorted internally).
BoundReport pf_bound_unequal(const UtilityLimits& limits);

// Tight max-min fairness bound for arbitrary positive limits.
BoundReport mmf_bound_unequal(const UtilityLimits& limits);

// Classical equal-limit comparators.
double bft_pf_bound_equal(std::size_t n);   // 1 - (2 sqrt(n) - 1)/n
double bft_mmf_bound_equal(std::size_t n);  // 1 - 4n/(n+1)^2

// Relative improvement of the equal-limit PF bound over the classical one.
double delta_improvement(std::size_t n);

// Supremum of both bounds over all positive limit vectors; approached but
// never attained, so callers use it as a strict ceiling.
double worst_case_sup(std::size_t n, Criterion criterion);

// Full case analysis behind pf_bound_unequal, shared with the worst-case
// instance construction. Vectors h and the scalars below live on the
// sorted-descending scale.
struct PfUnequalAnalysis {
  std::vector<double> sorted;
  std::vector<std::size_t> perm;
  std::vector<double> h;  // candidate values for l = 1..n-1
  bool case1 = true;      // discriminator total*L2 <= L1^2
  std::size_t l_star = 1;
  double h_min = 0.0;
  double y_star = 0.0;  // 1/A(l_star)
  double f_h = 0.0;     // h_min / n
  // Boundary candidate, present only in case 2.
  bool ytilde_wins = false;
  double y_tilde = 0.0;
  double f_ytilde = 0.0;
  double bound = 0.0;
};

PfUnequalAnalysis analyze_pf_unequal(const UtilityLimits& limits);

// Case analysis behind mmf_bound_unequal and the matching construction.
struct MmfAnalysis {
  std::vector<double> sorted;
  std::vector<std::size_t> perm;
  std::vector<int> s_membership;  // regime of each l = 1..n-1 (entry l-1)
  bool s1_case = false;
  std::size_t l_star = 1;
  double m_l_star = 0.0;  // sum of the fully weighted prefix
  double Y = 0.0;         // prefix cost level used by the tight construction
  double bound = 0.0;
};

MmfAnalysis analyze_mmf(const UtilityLimits& limits);

}  // namespace pof
