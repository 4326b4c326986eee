#include "pof/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "pof/bounds.hpp"
#include "pof/errors.hpp"
#include "pof/format.hpp"
#include "pof/rng.hpp"

namespace pof {

double ExperimentRow::at(const std::string& name) const {
  for (const auto& [col, value] : columns)
    if (col == name) return value;
  throw std::out_of_range("no column named " + name);
}

namespace {

void check_n_range(int n_min, int n_max) {
  if (n_min < 2 || n_max < n_min)
    throw InvalidRange("need 2 <= n_min <= n_max, got [" +
                       std::to_string(n_min) + ", " + std::to_string(n_max) +
                       "]");
}

double equal_limit_bound(Criterion criterion, int n) {
  if (criterion == Criterion::PF) return pf_bound_equal(static_cast<std::size_t>(n)).bound;
  return mmf_bound_unequal(UtilityLimits::equal(static_cast<std::size_t>(n))).bound;
}

double population_variance(const std::vector<double>& values) {
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double acc = 0.0;
  for (double v : values) acc += (v - mean) * (v - mean);
  return acc / static_cast<double>(values.size());
}

}  // namespace

ExperimentTable sweep_bounds_vs_n(Criterion criterion, int n_min, int n_max) {
  check_n_range(n_min, n_max);
  ExperimentTable table;
  for (int n = n_min; n <= n_max; ++n) {
    double bft = criterion == Criterion::PF
                     ? bft_pf_bound_equal(static_cast<std::size_t>(n))
                     : bft_mmf_bound_equal(static_cast<std::size_t>(n));
    table.push_back({{{"n", static_cast<double>(n)},
                      {"our_bound", equal_limit_bound(criterion, n)},
                      {"bft_bound", bft}}});
  }
  return table;
}

ExperimentTable sweep_delta(int n_min, int n_max) {
  check_n_range(n_min, n_max);
  ExperimentTable table;
  for (int n = n_min; n <= n_max; ++n)
    table.push_back({{{"n", static_cast<double>(n)},
                      {"delta", delta_improvement(static_cast<std::size_t>(n))}}});
  // The improvement peaks locally at n = a(a+1); verify for every such n
  // whose neighbours fall inside the requested range.
  for (int a = 1;; ++a) {
    int n = a * (a + 1);
    if (n >= n_max) break;
    if (n <= n_min) continue;
    double here = table[static_cast<std::size_t>(n - n_min)].at("delta");
    double left = table[static_cast<std::size_t>(n - 1 - n_min)].at("delta");
    double right = table[static_cast<std::size_t>(n + 1 - n_min)].at("delta");
    if (!(here > left && here > right))
      throw std::logic_error("improvement not locally maximal at n = " +
                             std::to_string(n));
  }
  return table;
}

ExperimentTable variance_sensitivity(Criterion criterion, int n,
                                     double sigma_step, int steps,
                                     int draws_per_sigma, std::uint64_t seed) {
  if (n < 2) throw InvalidParams("need n >= 2");
  if (!(sigma_step >= 0.0)) throw InvalidParams("sigma_step must be nonnegative");
  if (steps < 1) throw InvalidParams("need steps >= 1");
  if (draws_per_sigma < 1) throw InvalidParams("need draws_per_sigma >= 1");

  ExperimentTable table;
  for (int t = 1; t <= steps; ++t) {
    double sigma = sigma_step * (t - 1);
    for (int d = 1; d <= draws_per_sigma; ++d) {
      Rng rng(substream_seed(seed, static_cast<std::uint64_t>(t),
                             static_cast<std::uint64_t>(d)));
      std::vector<double> limits(static_cast<std::size_t>(n));
      for (auto& v : limits) {
        do {
          v = rng.normal(1.0, sigma);
        } while (!(v > 0.0));
      }
      UtilityLimits L{limits};
      double bound = criterion == Criterion::PF ? pf_bound_unequal(L).bound
                                                : mmf_bound_unequal(L).bound;
      table.push_back({{{"sigma", sigma},
                        {"sample_variance", population_variance(limits)},
                        {"bound", bound}}});
    }
  }
  return table;
}

ExperimentTable n2_limit_sweep(const std::vector<double>& l2_values) {
  ExperimentTable table;
  for (double l2 : l2_values) {
    if (!(std::isfinite(l2) && l2 > 0.0 && l2 <= 1.0))
      throw InvalidParams("every l2 must lie in (0, 1], got " + format_sig12(l2));
    double bound = pf_bound_unequal(UtilityLimits{{1.0, l2}}).bound;
    table.push_back({{{"l2", l2},
                      {"sample_variance", (1.0 - l2) * (1.0 - l2) / 4.0},
                      {"bound", bound}}});
  }
  return table;
}

std::string to_csv(const ExperimentTable& table) {
  if (table.empty()) return "";
  std::string out;
  const auto& header = table.front().columns;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i].first;
  }
  out += '\n';
  for (const auto& row : table) {
    if (row.columns.size() != header.size())
      throw std::logic_error("rows disagree on column count");
    for (std::size_t i = 0; i < row.columns.size(); ++i) {
      if (row.columns[i].first != header[i].first)
        throw std::logic_error("rows disagree on column names");
      if (i) out += ',';
      out += format_sig12(row.columns[i].second);
    }
    out += '\n';
  }
  return out;
}

std::string svg_line_chart(const ExperimentTable& table,
                           const std::string& x_col, const std::string& y_col) {
  if (table.empty()) throw InvalidParams("cannot chart an empty table");
  std::vector<double> xs, ys;
  xs.reserve(table.size());
  ys.reserve(table.size());
  for (const auto& row : table) {
    xs.push_back(row.at(x_col));
    ys.push_back(row.at(y_col));
  }
  auto span = [](const std::vector<double>& v) {
    double lo = v[0], hi = v[0];
    for (double x : v) {
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
    if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
    return std::pair{lo, hi};
  };
  auto [x_lo, x_hi] = span(xs);
  auto [y_lo, y_hi] = span(ys);

  const double width = 640, height = 400;
  const double left = 70, right = 620, top = 30, bottom = 355;
  auto sx = [&](double x) { return left + (right - left) * (x - x_lo) / (x_hi - x_lo); };
  auto sy = [&](double y) { return bottom - (bottom - top) * (y - y_lo) / (y_hi - y_lo); };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf);
  };

  std::string svg;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" "
                "height=\"%g\" viewBox=\"0 0 %g %g\">\n",
                width, height, width, height);
  svg += buf;
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<g fill=\"none\" stroke=\"black\"><path d=\"M%g %g V%g H%g\"/></g>\n",
                left, top, bottom, right);
  svg += buf;
  svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", sx(xs[i]), sy(ys[i]));
    svg += buf;
  }
  svg += "\"/>\n";
  auto text = [&](double x, double y, const std::string& anchor,
                  const std::string& s) {
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" "
                  "font-size=\"12\" text-anchor=\"%s\">%s</text>\n",
                  x, y, anchor.c_str(), s.c_str());
    svg += buf;
  };
  text(left, bottom + 18, "middle", num(x_lo));
  text(right, bottom + 18, "middle", num(x_hi));
  text(left - 8, bottom + 4, "end", num(y_lo));
  text(left - 8, top + 4, "end", num(y_hi));
  text((left + right) / 2, bottom + 36, "middle", x_col);
  text((left + right) / 2, top - 12, "middle", y_col + " vs " + x_col);
  svg += "</svg>\n";
  return svg;
}

}  // namespace pof
