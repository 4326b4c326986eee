#include "pof/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pof/rng.hpp"

namespace pof {

namespace {

// Smallest fair-to-optimal ratio at one cost vector, over every split l for
// which serving players 1..l fully and player l+1 partially exhausts the
// budget. Returns +inf when no split qualifies (budget slack everywhere).
double min_ratio_at(Criterion criterion, const std::vector<double>& L,
                    const std::vector<double>& c) {
  const std::size_t n = L.size();
  std::vector<double> P(n + 1, 0.0), M(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    P[i + 1] = P[i] + c[i] * L[i];
    M[i + 1] = M[i] + L[i];
  }
  double numerator;
  if (criterion == Criterion::PF) {
    numerator = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      numerator += 1.0 / (static_cast<double>(n) * c[i]);
  } else {
    if (P[n] <= 1.0) return std::numeric_limits<double>::infinity();
    numerator = M[n] / P[n];
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t l = 1; l + 1 <= n; ++l) {
    if (!(P[l] <= 1.0 && P[l + 1] > 1.0)) continue;
    double served = M[l] + (1.0 - P[l]) / c[l];
    double f = numerator / served;
    if (f < best) best = f;
  }
  return best;
}

double grid_min_bound(Criterion criterion, const UtilityLimits& limits,
                      int coarse_steps, int refine_rounds) {
  validate_limits(limits);
  auto [sorted, perm] = sorted_descending(limits);
  const std::size_t n = sorted.n();
  if (n > 3)
    throw UnsupportedN("grid search supports n <= 3, got " + std::to_string(n));
  if (coarse_steps < 50) throw InvalidParams("coarse_steps must be at least 50");
  if (refine_rounds < 0) throw InvalidParams("refine_rounds must be nonnegative");
  const auto& L = sorted.values;

  std::vector<double> lo0(n), hi0(n);
  for (std::size_t i = 0; i < n; ++i) {
    hi0[i] = 1.0 / L[i];
    lo0[i] = criterion == Criterion::PF ? 1.0 / (static_cast<double>(n) * L[i]) : 0.0;
  }

  double best_f = std::numeric_limits<double>::infinity();
  std::vector<double> best_c(n, 0.0);
  std::vector<double> lo = lo0, hi = hi0;
  std::vector<double> c(n);
  std::vector<int> idx(n);

  for (int round = 0; round <= refine_rounds; ++round) {
    if (round > 0) {
      for (std::size_t i = 0; i < n; ++i) {
        double width = (hi0[i] - lo0[i]) / std::pow(10.0, round);
        lo[i] = std::max(lo0[i], best_c[i] - 0.5 * width);
        hi[i] = std::min(hi0[i], best_c[i] + 0.5 * width);
      }
    }
    std::fill(idx.begin(), idx.end(), 0);
    // Lexicographic walk of the lattice; strict improvement keeps the
    // lexicographically smallest argmin on ties.
    while (true) {
      for (std::size_t i = 0; i < n; ++i)
        c[i] = lo[i] + (hi[i] - lo[i]) * idx[i] / coarse_steps;
      double f = min_ratio_at(criterion, L, c);
      if (f < best_f) {
        best_f = f;
        best_c = c;
      }
      std::size_t pos = n;
      while (pos > 0) {
        if (++idx[pos - 1] <= coarse_steps) break;
        idx[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return 1.0 - best_f;
}

}  // namespace

double grid_min_pf_bound(const UtilityLimits& limits, int coarse_steps,
                         int refine_rounds) {
  return grid_min_bound(Criterion::PF, limits, coarse_steps, refine_rounds);
}

double grid_min_mmf_bound(const UtilityLimits& limits, int coarse_steps,
                          int refine_rounds) {
  return grid_min_bound(Criterion::MMF, limits, coarse_steps, refine_rounds);
}

std::vector<Allocation> random_feasible_points(const BudgetUtilitySet& set,
                                               std::size_t count,
                                               std::uint64_t seed) {
  if (count < 1) throw InvalidParams("count must be at least 1");
  const std::size_t n = set.n();
  const auto& L = set.limits.values;
  const auto& c = set.costs;
  const double cap = set.budget_weight();
  Rng rng(seed);

  std::vector<Allocation> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Allocation a;
    a.utilities.resize(n);
    double spent = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      a.utilities[i] = rng.uniform() * L[i];
      spent += c[i] * a.utilities[i];
    }
    double project = rng.uniform();
    if (spent > 1.0) {
      for (auto& u : a.utilities) u /= spent;
    } else if (project < 0.25 && cap >= 1.0 && cap > spent) {
      // Walk toward the full-box corner until the budget binds.
      double t = (1.0 - spent) / (cap - spent);
      for (std::size_t i = 0; i < n; ++i)
        a.utilities[i] = std::min(L[i], a.utilities[i] + t * (L[i] - a.utilities[i]));
    }
    points.push_back(std::move(a));
  }
  return points;
}

bool lex_dominance_check(const BudgetUtilitySet& set, const Allocation& candidate,
                         std::size_t trials, std::uint64_t seed) {
  const std::size_t n = set.n();
  auto sorted_ratios = [&](const Allocation& a) {
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = a.utilities[i] / set.limits.values[i];
    std::sort(r.begin(), r.end());
    return r;
  };
  const std::vector<double> rc = sorted_ratios(candidate);
  for (const Allocation& p : random_feasible_points(set, trials, seed)) {
    std::vector<double> rs = sorted_ratios(p);
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(rs[i] - rc[i]) <= 1e-9) continue;
      if (rs[i] > rc[i]) return false;
      break;
    }
  }
  return true;
}

}  // namespace pof
