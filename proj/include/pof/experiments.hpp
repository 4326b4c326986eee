#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pof/domain.hpp"

namespace pof {

// One output row: ordered (column name, value) pairs. Every row of a table
// carries the same columns in the same order.
struct ExperimentRow {
  std::vector<std::pair<std::string, double>> columns;

  double at(const std::string& name) const;
};

using ExperimentTable = std::vector<ExperimentRow>;

// Equal-limit bound against the budget-feasibility-test comparator, one row
// per n. Columns: n, our_bound, bft_bound.
// Throws InvalidRange unless 2 <= n_min <= n_max.
ExperimentTable sweep_bounds_vs_n(Criterion criterion, int n_min, int n_max);

// Relative improvement over the comparator for the PF equal-limit bound.
// Columns: n, delta. Throws InvalidRange unless 2 <= n_min <= n_max.
ExperimentTable sweep_delta(int n_min, int n_max);

// Bound as a function of limit dispersion. For t = 1..steps, sigma_t =
// sigma_step * (t - 1); each draw samples n limits from Normal(1, sigma_t),
// redrawing any non-positive component. Columns: sigma, sample_variance,
// bound (variance uses divisor n). Rows ordered by (t, draw); each draw uses
// an independent substream of seed, so output is reproducible byte-for-byte.
// Throws InvalidParams on n < 2, sigma_step < 0, steps < 1, or
// draws_per_sigma < 1.
ExperimentTable variance_sensitivity(Criterion criterion, int n,
                                     double sigma_step, int steps,
                                     int draws_per_sigma, std::uint64_t seed);

// PF bound for the two-player family L = (1, l2), one row per l2. Columns:
// l2, sample_variance, bound. Throws InvalidParams unless every l2 is in
// (0, 1].
ExperimentTable n2_limit_sweep(const std::vector<double>& l2_values);

// CSV rendering: header row, comma separator, 12 significant digits,
// trailing newline. Throws std::logic_error if rows disagree on columns.
std::string to_csv(const ExperimentTable& table);

// Minimal static SVG: one polyline of y_col against x_col with framed axes
// and min/max labels.
std::string svg_line_chart(const ExperimentTable& table,
                           const std::string& x_col, const std::string& y_col);

}  // namespace pof
