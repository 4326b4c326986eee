#pragma once

#include <cstdint>
#include <vector>

#include "pof/domain.hpp"
#include "pof/rng.hpp"

namespace helpers {

inline pof::UtilityLimits random_limits(std::size_t n, pof::Rng& rng) {
  std::vector<double> values(n);
  for (auto& v : values) v = rng.uniform(0.05, 2.5);
  return pof::UtilityLimits{values};
}

// Feasible instance: each c_i L_i lands in [0, 1), with roughly one player in
// ten getting a free ride (c_i = 0).
inline pof::BudgetUtilitySet random_instance(std::size_t n, pof::Rng& rng) {
  pof::UtilityLimits limits = random_limits(n, rng);
  std::vector<double> costs(n);
  for (std::size_t i = 0; i < n; ++i)
    costs[i] = rng.uniform() < 0.1 ? 0.0 : rng.uniform() / limits.values[i];
  return pof::validate_instance(limits, costs);
}

}  // namespace helpers
