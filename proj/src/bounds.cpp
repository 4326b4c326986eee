#include "pof/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pof {

namespace {

std::size_t integer_sqrt(std::size_t n) {
  auto k = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while ((k + 1) * (k + 1) <= n) ++k;
  while (k * k > n) --k;
  return k;
}

void require_n(std::size_t n) {
  if (n < 2) throw InvalidN("need at least 2 players, got " + std::to_string(n));
}

}  // namespace

PrefixAggregates prefix_aggregates(const std::vector<double>& sorted_desc) {
  const std::size_t n = sorted_desc.size();
  PrefixAggregates agg;
  agg.A.assign(n + 1, 0.0);
  agg.M.assign(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    agg.A[i + 1] = agg.A[i] + std::sqrt(sorted_desc[i]);
    agg.M[i + 1] = agg.M[i] + sorted_desc[i];
  }
  agg.B.assign(n, 0.0);
  for (std::size_t l = 0; l < n; ++l) agg.B[l] = agg.M[n] - agg.M[l + 1];
  return agg;
}

BoundReport pf_bound_equal(std::size_t n) {
  require_n(n);
  BoundReport report;
  report.criterion = Criterion::PF;
  if (n == 2) {
    report.bound = (2.0 - std::sqrt(3.0)) / 4.0;
    report.case_tag = "PF-equal-n2";
    report.aux["y_tilde"] = std::sqrt(3.0) - 1.0;
    return report;
  }
  const std::size_t k = integer_sqrt(n);
  auto value = [n](std::size_t m) {
    return (static_cast<double>(m) + static_cast<double>(n) / static_cast<double>(m) - 1.0) /
           static_cast<double>(n);
  };
  const double vk = value(k);
  const double vk1 = value(k + 1);
  const std::size_t m = vk <= vk1 ? k : k + 1;
  report.bound = 1.0 - std::min(vk, vk1);
  report.case_tag = m == k ? "PF-equal-branch1" : "PF-equal-branch2";
  report.aux["m"] = static_cast<double>(m);
  report.aux["k"] = static_cast<double>(k);
  report.aux["eps"] = std::sqrt(static_cast<double>(n)) - static_cast<double>(k);
  assert(report.bound >= 0.0 && report.bound < 1.0 - 1.0 / static_cast<double>(n));
  return report;
}

PfUnequalAnalysis analyze_pf_unequal(const UtilityLimits& limits) {
  validate_limits(limits);
  PfUnequalAnalysis an;
  {
    auto [sorted, perm] = sorted_descending(limits);
    an.sorted = std::move(sorted.values);
    an.perm = std::move(perm);
  }
  const std::size_t n = an.sorted.size();
  const double dn = static_cast<double>(n);
  const PrefixAggregates agg = prefix_aggregates(an.sorted);
  const double total = agg.total();

  an.h.resize(n - 1);
  an.l_star = 1;
  an.h_min = std::numeric_limits<double>::infinity();
  for (std::size_t l = 1; l <= n - 1; ++l) {
    double h = (agg.A[l] * agg.A[l] + (total - agg.M[l])) / agg.M[l];
    an.h[l - 1] = h;
    if (h < an.h_min) {
      an.h_min = h;
      an.l_star = l;
    }
  }
  an.y_star = 1.0 / agg.A[an.l_star];
  an.f_h = an.h_min / dn;

  const double l1 = an.sorted[0];
  const double l2 = an.sorted[1];
  an.case1 = total * l2 <= l1 * l1;
  if (an.case1) {
    an.bound = 1.0 - an.f_h;
    return an;
  }

  const double tail3 = total - l1 - l2;  // sum_{i>=3} L_i
  const double root =
      std::sqrt(l2 * l2 + 2.0 * l1 * l2 + (l1 + l2) * tail3) + std::sqrt(l1 * l2);
  an.f_ytilde = root * root / (dn * (l1 + l2) * (l1 + l2));
  const double b0 = total - l1;  // sum_{i>=2} L_i
  an.y_tilde = (-std::sqrt(l1) + std::sqrt(b0 + l1 + b0 * l1 / l2)) / b0;
  an.ytilde_wins = an.f_ytilde < an.f_h;
  an.bound = 1.0 - std::min(an.f_h, an.f_ytilde);
  return an;
}

BoundReport pf_bound_unequal(const UtilityLimits& limits) {
  PfUnequalAnalysis an = analyze_pf_unequal(limits);
  const std::size_t n = an.sorted.size();

  BoundReport report;
  report.criterion = Criterion::PF;
  report.bound = an.bound;
  report.permutation = an.perm;
  report.aux["h_min"] = an.h_min;
  if (an.case1 || !an.ytilde_wins) {
    report.case_tag = an.case1 ? "PF-unequal-case1" : "PF-unequal-case2-h";
    report.l_star = an.l_star;
    report.aux["a_l_star"] = 1.0 / an.y_star;
    report.aux["y_star"] = an.y_star;
    report.aux["x_star"] = 1.0 / an.sorted[an.l_star];
  } else {
    report.case_tag = "PF-unequal-case2-ytilde";
    report.l_star = 1;
    report.aux["y_tilde"] = an.y_tilde;
    report.aux["x_star"] = 1.0 / an.sorted[1];
  }
  if (!an.case1) report.aux["f_ytilde"] = an.f_ytilde;
  assert(report.bound >= 0.0 && report.bound < 1.0 - 1.0 / static_cast<double>(n));
  (void)n;
  return report;
}

MmfAnalysis analyze_mmf(const UtilityLimits& limits) {
  validate_limits(limits);
  MmfAnalysis an;
  {
    auto [sorted, perm] = sorted_descending(limits);
    an.sorted = std::move(sorted.values);
    an.perm = std::move(perm);
  }
  const std::size_t n = an.sorted.size();
  const double dn = static_cast<double>(n);
  const PrefixAggregates agg = prefix_aggregates(an.sorted);
  const double total = agg.total();

  an.s_membership.resize(n - 1);
  bool have_s1 = false;
  std::size_t s1_max = 0;
  bool have_s2 = false;
  std::size_t s2_min = 0;
  for (std::size_t l = 1; l <= n - 1; ++l) {
    const double m = agg.M[l];
    const double next = an.sorted[l];  // L_{l+1}
    const double low = (dn - static_cast<double>(l) - 1.0) * next;
    const double high = (dn - static_cast<double>(l) + 1.0) * next;
    int regime = 0;
    if (m > high) {
      regime = 2;
      if (!have_s2) {
        have_s2 = true;
        s2_min = l;
      }
    } else if (m > low) {
      regime = 1;
      have_s1 = true;
      s1_max = l;
    }
    an.s_membership[l - 1] = regime;
  }
  if (an.s_membership[n - 2] == 0)
    throw std::logic_error("split l = n-1 fell outside both regimes; limits must be nonpositive");

  if (have_s1) {
    an.s1_case = true;
    an.l_star = s1_max;
    const double next = an.sorted[an.l_star];
    const double m = agg.M[an.l_star];
    const double denom = m + (dn - static_cast<double>(an.l_star) + 1.0) * next;
    an.bound = 1.0 - 4.0 * next * total / (denom * denom);
    an.Y = 0.5 * (m / next - dn + static_cast<double>(an.l_star) + 1.0);
    if (!(an.Y > 0.0))
      throw std::logic_error("construction level Y must be positive in the interior regime");
  } else {
    an.s1_case = false;
    an.l_star = s2_min;
    an.bound =
        1.0 - total / (agg.M[an.l_star] * (dn - static_cast<double>(an.l_star) + 1.0));
    an.Y = 1.0;
  }
  an.m_l_star = agg.M[an.l_star];
  assert(an.bound >= 0.0 && an.bound < 1.0 - 1.0 / dn);
  return an;
}

BoundReport mmf_bound_unequal(const UtilityLimits& limits) {
  MmfAnalysis an = analyze_mmf(limits);
  BoundReport report;
  report.criterion = Criterion::MMF;
  report.bound = an.bound;
  report.case_tag = an.s1_case ? "MMF-S1" : "MMF-S2";
  report.l_star = an.l_star;
  report.permutation = an.perm;
  report.s_membership = an.s_membership;
  report.aux["Y"] = an.Y;
  report.aux["m_l_star"] = an.m_l_star;
  report.aux["l_next_limit"] = an.sorted[an.l_star];
  return report;
}

double bft_pf_bound_equal(std::size_t n) {
  require_n(n);
  const double dn = static_cast<double>(n);
  return 1.0 - (2.0 * std::sqrt(dn) - 1.0) / dn;
}

double bft_mmf_bound_equal(std::size_t n) {
  require_n(n);
  const double dn = static_cast<double>(n);
  return 1.0 - 4.0 * dn / ((dn + 1.0) * (dn + 1.0));
}

double delta_improvement(std::size_t n) {
  require_n(n);
  const double classical = bft_pf_bound_equal(n);
  return (classical - pf_bound_equal(n).bound) / classical;
}

double worst_case_sup(std::size_t n, Criterion) {
  require_n(n);
  return 1.0 - 1.0 / static_cast<double>(n);
}

}  // namespace pof
