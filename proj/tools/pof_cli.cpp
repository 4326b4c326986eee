#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pof/allocation.hpp"
#include "pof/bounds.hpp"
#include "pof/domain.hpp"
#include "pof/errors.hpp"
#include "pof/experiments.hpp"
#include "pof/format.hpp"
#include "pof/io.hpp"
#include "pof/oracle.hpp"
#include "pof/worstcase.hpp"

namespace {

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    pof::write_file(out_path, text);
}

void emit_json(const nlohmann::json& j, const std::string& out_path) {
  emit_text(j.dump(2) + "\n", out_path);
}

// Shared --limits / --equal-n pair; exactly one must be given.
struct LimitsSource {
  std::string file;
  int equal_n = 0;
  CLI::Option* file_opt = nullptr;
  CLI::Option* equal_opt = nullptr;

  void attach(CLI::App* cmd) {
    file_opt = cmd->add_option("--limits", file,
                               "Limits or instance JSON file, {\"L\": [...]}")
                   ->check(CLI::ExistingFile);
    equal_opt = cmd->add_option("--equal-n", equal_n,
                                "Shorthand for N equal limits L = (1,...,1)");
    file_opt->excludes(equal_opt);
    equal_opt->excludes(file_opt);
  }

  bool using_equal() const { return equal_opt->count() > 0; }

  pof::UtilityLimits resolve() const {
    if (file_opt->count() > 0)
      return pof::limits_from_json(nlohmann::json::parse(pof::read_file(file)));
    if (equal_opt->count() > 0) {
      if (equal_n < 2)
        throw pof::InvalidN("need at least 2 players, got " +
                            std::to_string(equal_n));
      return pof::UtilityLimits::equal(static_cast<std::size_t>(equal_n));
    }
    throw pof::InvalidParams("exactly one of --limits or --equal-n is required");
  }
};

// Shared CSV/SVG output options for the experiment commands.
struct CsvOutput {
  std::string out;
  std::string svg;
  std::string svg_x;
  std::string svg_y;

  void attach(CLI::App* cmd, std::string default_x, std::string default_y) {
    svg_x = std::move(default_x);
    svg_y = std::move(default_y);
    cmd->add_option("--out", out, "Write CSV here instead of stdout");
    cmd->add_option("--svg", svg, "Also write an SVG line chart to this path");
    cmd->add_option("--svg-x", svg_x, "Chart x column")->capture_default_str();
    cmd->add_option("--svg-y", svg_y, "Chart y column")->capture_default_str();
  }

  void emit(const pof::ExperimentTable& table) const {
    emit_text(pof::to_csv(table), out);
    if (!svg.empty()) pof::write_file(svg, pof::svg_line_chart(table, svg_x, svg_y));
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Price-of-fairness bounds and solvers for budget utility sets"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* bound_cmd =
      app.add_subcommand("bound", "Tight POF upper bound with case analysis");
  struct {
    std::string criterion;
    LimitsSource src;
    std::string out;
  } bound_args;
  bound_cmd->add_option("--criterion", bound_args.criterion, "pf or mmf")
      ->required();
  bound_args.src.attach(bound_cmd);
  bound_cmd->add_option("--out", bound_args.out, "Write JSON here instead of stdout");
  bound_cmd->callback([&] {
    auto criterion = pof::criterion_from_string(bound_args.criterion);
    pof::BoundReport report;
    if (criterion == pof::Criterion::PF) {
      if (bound_args.src.using_equal())
        report = pof::pf_bound_equal(bound_args.src.resolve().n());
      else
        report = pof::pf_bound_unequal(bound_args.src.resolve());
    } else {
      report = pof::mmf_bound_unequal(bound_args.src.resolve());
    }
    emit_json(pof::bound_report_to_json(report), bound_args.out);
  });

  auto* alloc_cmd =
      app.add_subcommand("allocate", "Solve one allocation problem on an instance");
  struct {
    std::string method;
    std::string instance;
    double tol = 1e-12;
    std::string out;
  } alloc_args;
  alloc_cmd->add_option("--method", alloc_args.method, "utilitarian, pf or mmf")
      ->required()
      ->check(CLI::IsMember({"utilitarian", "pf", "mmf"}));
  alloc_cmd
      ->add_option("--instance", alloc_args.instance,
                   "Instance JSON file, {\"L\": [...], \"c\": [...]}")
      ->required()
      ->check(CLI::ExistingFile);
  alloc_cmd->add_option("--tol", alloc_args.tol, "Water-filling budget tolerance")
      ->capture_default_str();
  alloc_cmd->add_option("--out", alloc_args.out, "Write JSON here instead of stdout");
  alloc_cmd->callback([&] {
    auto set = pof::instance_from_json(
        nlohmann::json::parse(pof::read_file(alloc_args.instance)));
    pof::Allocation alloc;
    if (alloc_args.method == "utilitarian")
      alloc = pof::solve_utilitarian(set).first;
    else if (alloc_args.method == "pf")
      alloc = pof::solve_pf(set, alloc_args.tol);
    else
      alloc = pof::solve_mmf(set);
    emit_json(pof::allocation_to_json(alloc), alloc_args.out);
  });

  auto* verify_cmd = app.add_subcommand(
      "verify", "Construct the worst case and check the bound is attained");
  struct {
    std::string criterion;
    LimitsSource src;
    double tol = 1e-8;
    std::string out;
  } verify_args;
  verify_cmd->add_option("--criterion", verify_args.criterion, "pf or mmf")
      ->required();
  verify_args.src.attach(verify_cmd);
  verify_cmd->add_option("--tol", verify_args.tol, "Maximum |bound - achieved POF|")
      ->capture_default_str();
  verify_cmd->add_option("--out", verify_args.out, "Write JSON here instead of stdout");
  verify_cmd->callback([&] {
    auto report = pof::verify_tightness(verify_args.src.resolve(),
                                        pof::criterion_from_string(verify_args.criterion),
                                        verify_args.tol);
    emit_json(pof::tightness_report_to_json(report), verify_args.out);
    exit_code = report.pass ? 0 : 1;
  });

  auto* wc_cmd = app.add_subcommand(
      "worstcase", "Emit an instance attaining the tight bound");
  struct {
    std::string criterion;
    LimitsSource src;
    std::string out;
  } wc_args;
  wc_cmd->add_option("--criterion", wc_args.criterion, "pf or mmf")->required();
  wc_args.src.attach(wc_cmd);
  wc_cmd->add_option("--out", wc_args.out, "Write JSON here instead of stdout");
  wc_cmd->callback([&] {
    auto criterion = pof::criterion_from_string(wc_args.criterion);
    pof::BudgetUtilitySet instance;
    if (criterion == pof::Criterion::PF) {
      if (wc_args.src.using_equal())
        instance = pof::construct_pf_worstcase_equal(wc_args.src.resolve().n());
      else
        instance = pof::construct_pf_worstcase_unequal(wc_args.src.resolve());
    } else {
      instance = pof::construct_mmf_worstcase(wc_args.src.resolve());
    }
    emit_json(pof::instance_to_json(instance), wc_args.out);
  });

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "CSV of equal-limit bound vs n, ours next to the classical one");
  struct {
    std::string criterion;
    int n_min = 2;
    int n_max = 20;
    CsvOutput csv;
  } sweep_args;
  sweep_cmd->add_option("--criterion", sweep_args.criterion, "pf or mmf")
      ->required();
  sweep_cmd->add_option("--n-min", sweep_args.n_min, "Smallest n")
      ->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep_args.n_max, "Largest n")
      ->capture_default_str();
  sweep_args.csv.attach(sweep_cmd, "n", "our_bound");
  sweep_cmd->callback([&] {
    sweep_args.csv.emit(pof::sweep_bounds_vs_n(
        pof::criterion_from_string(sweep_args.criterion), sweep_args.n_min,
        sweep_args.n_max));
  });

  auto* delta_cmd = app.add_subcommand(
      "delta", "CSV of the relative improvement over the classical PF bound");
  struct {
    int n_min = 2;
    int n_max = 50;
    CsvOutput csv;
  } delta_args;
  delta_cmd->add_option("--n-min", delta_args.n_min, "Smallest n")
      ->capture_default_str();
  delta_cmd->add_option("--n-max", delta_args.n_max, "Largest n")
      ->capture_default_str();
  delta_args.csv.attach(delta_cmd, "n", "delta");
  delta_cmd->callback([&] {
    delta_args.csv.emit(pof::sweep_delta(delta_args.n_min, delta_args.n_max));
  });

  auto* var_cmd = app.add_subcommand(
      "variance", "CSV of bound vs limit dispersion under Normal(1, sigma) draws");
  struct {
    std::string criterion;
    int n = 0;
    double sigma_step = 0.01;
    int steps = 100;
    int draws = 1;
    std::uint64_t seed = 0;
    CsvOutput csv;
  } var_args;
  var_cmd->add_option("--criterion", var_args.criterion, "pf or mmf")->required();
  var_cmd->add_option("--n", var_args.n, "Number of players")->required();
  var_cmd->add_option("--sigma-step", var_args.sigma_step,
                      "sigma_t = sigma-step * (t - 1)")
      ->capture_default_str();
  var_cmd->add_option("--steps", var_args.steps, "Number of sigma values")
      ->capture_default_str();
  var_cmd->add_option("--draws", var_args.draws, "Limit vectors per sigma")
      ->capture_default_str();
  var_cmd->add_option("--seed", var_args.seed, "RNG seed")
      ->required()
      ->envname("POF_SEED");
  var_args.csv.attach(var_cmd, "sigma", "bound");
  var_cmd->callback([&] {
    var_args.csv.emit(pof::variance_sensitivity(
        pof::criterion_from_string(var_args.criterion), var_args.n,
        var_args.sigma_step, var_args.steps, var_args.draws, var_args.seed));
  });

  auto* n2_cmd = app.add_subcommand(
      "n2sweep", "CSV of the two-player PF bound as L2 sweeps over (0, 1]");
  struct {
    std::vector<double> l2;
    double lo = 0.01;
    double hi = 1.0;
    int points = 100;
    CsvOutput csv;
  } n2_args;
  n2_cmd->add_option("--l2", n2_args.l2, "Explicit L2 values (repeatable)");
  n2_cmd->add_option("--l2-min", n2_args.lo, "Sweep start")->capture_default_str();
  n2_cmd->add_option("--l2-max", n2_args.hi, "Sweep end")->capture_default_str();
  n2_cmd->add_option("--points", n2_args.points, "Sweep length when --l2 is absent")
      ->capture_default_str();
  n2_args.csv.attach(n2_cmd, "l2", "bound");
  n2_cmd->callback([&] {
    std::vector<double> values = n2_args.l2;
    if (values.empty()) {
      if (n2_args.points < 1) throw pof::InvalidParams("need points >= 1");
      for (int i = 0; i < n2_args.points; ++i)
        values.push_back(i + 1 == n2_args.points
                             ? n2_args.hi
                             : n2_args.lo + (n2_args.hi - n2_args.lo) * i /
                                                (n2_args.points - 1));
    }
    n2_args.csv.emit(pof::n2_limit_sweep(values));
  });

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Cross-check the closed-form bound against a grid search (n <= 3)");
  struct {
    std::string criterion;
    LimitsSource src;
    int steps = 50;
    int rounds = 3;
    std::string out;
  } oracle_args;
  oracle_cmd->add_option("--criterion", oracle_args.criterion, "pf or mmf")
      ->required();
  oracle_args.src.attach(oracle_cmd);
  oracle_cmd->add_option("--steps", oracle_args.steps, "Coarse grid steps per axis")
      ->capture_default_str();
  oracle_cmd->add_option("--rounds", oracle_args.rounds, "Refinement rounds")
      ->capture_default_str();
  oracle_cmd->add_option("--out", oracle_args.out, "Write JSON here instead of stdout");
  oracle_cmd->callback([&] {
    auto criterion = pof::criterion_from_string(oracle_args.criterion);
    auto limits = oracle_args.src.resolve();
    double grid = criterion == pof::Criterion::PF
                      ? pof::grid_min_pf_bound(limits, oracle_args.steps,
                                               oracle_args.rounds)
                      : pof::grid_min_mmf_bound(limits, oracle_args.steps,
                                                oracle_args.rounds);
    double formula = criterion == pof::Criterion::PF
                         ? pof::pf_bound_unequal(limits).bound
                         : pof::mmf_bound_unequal(limits).bound;
    nlohmann::json j{{"criterion", pof::to_string(criterion)},
                     {"grid_bound", pof::round_sig12(grid)},
                     {"formula_bound", pof::round_sig12(formula)},
                     {"abs_diff", pof::round_sig12(std::abs(grid - formula))}};
    emit_json(j, oracle_args.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const pof::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
