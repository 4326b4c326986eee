#pragma once

#include <string>

#include "pof/bounds.hpp"
#include "pof/domain.hpp"

namespace pof {

// Instances attaining the tight bounds. Costs are returned in the order of
// the input limits, not the internally sorted order.
BudgetUtilitySet construct_pf_worstcase_equal(std::size_t n);
BudgetUtilitySet construct_pf_worstcase_unequal(const UtilityLimits& limits);
BudgetUtilitySet construct_mmf_worstcase(const UtilityLimits& limits);

struct TightnessReport {
  Criterion criterion = Criterion::PF;
  double bound = 0.0;
  double achieved_pof = 0.0;
  double gap = 0.0;
  bool pass = false;
  std::string case_tag;
  BudgetUtilitySet instance;
};

// Builds the criterion's worst-case instance, solves it end to end, and
// checks that the achieved POF matches the bound within tol.
TightnessReport verify_tightness(const UtilityLimits& limits, Criterion criterion,
                                 double tol);

}  // namespace pof
