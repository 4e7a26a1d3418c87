// pensim — simulate the P/C/CB pension systems, verify their equivalence,
// and evaluate sustainability metrics on scenario files.
//
// Exit codes: 0 success, 1 validation error, 2 verification failure.

#include "pensim/engine.hpp"
#include "pensim/index_shares.hpp"
#include "pensim/metrics.hpp"
#include "pensim/render.hpp"
#include "pensim/scenario_file.hpp"
#include "pensim/transitions.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace pensim;

Trajectory run_scenario(const ScenarioFile& scenario) {
  if (scenario.transition && scenario.beta_scenario)
    throw ScenarioError("scenario: transition and beta_scenario cannot be combined");
  if (scenario.transition)
    return simulate_with_transition(scenario.system, scenario.horizon, *scenario.transition);
  return simulate(scenario.system, scenario.horizon, scenario.beta_scenario);
}

int cmd_simulate(const std::string& path, const std::string& format, bool decimal) {
  const ScenarioFile scenario = load_scenario_file(path);
  const Trajectory traj = run_scenario(scenario);
  if (format == "csv")
    std::cout << ledger_csv(traj, decimal ? NumberStyle::Decimal : NumberStyle::Exact);
  else
    std::cout << ledger_markdown(traj);
  return 0;
}

int cmd_table(const std::string& path, int which) {
  const ScenarioFile scenario = load_scenario_file(path);
  const SystemSpec& s = scenario.system;
  std::cout << comparison_table(which, s.demography, s.initial_state_assets, s.gamma,
                                scenario.horizon);
  return 0;
}

int cmd_equivalence(const std::string& path) {
  const ScenarioFile scenario = load_scenario_file(path);
  const SystemSpec& s = scenario.system;
  const SystemSpec payg(SystemKind::P, s.demography, s.gamma, s.initial_state_assets);
  const SystemSpec funded_bonus(SystemKind::CB, s.demography, s.gamma, s.initial_state_assets);
  const EquivalenceReport report = check_equivalence(payg, funded_bonus, scenario.horizon);
  std::cout << equivalence_report_text(report);
  return report.all_passed() ? 0 : 2;
}

int cmd_metrics(const std::string& path, const std::string& which) {
  const ScenarioFile scenario = load_scenario_file(path);
  const SystemSpec& s = scenario.system;

  if (which == "ror") {
    const Trajectory traj = run_scenario(scenario);
    std::cout << "| generation | individual | systemic |\n|---|---|---|\n";
    for (std::int64_t n = 1; n <= scenario.horizon; ++n)
      std::cout << "| " << n << " | "
                << to_decimal_string(rate_of_return(traj, n, ReturnView::Individual)) << " | "
                << to_decimal_string(rate_of_return(traj, n, ReturnView::Systemic)) << " |\n";
    return 0;
  }
  if (which == "primary-balance" || which == "ndc") {
    const Trajectory traj = run_scenario(scenario);
    std::cout << "| i | " << which << " |\n|---|---|\n";
    const std::int64_t first = which == "ndc" ? 1 : 0;
    for (std::int64_t i = first; i <= scenario.horizon; ++i) {
      const Rational v =
          which == "ndc" ? ndc_balance(traj, i) : primary_balance(traj, i);
      std::cout << "| " << i << " | " << to_decimal_string(v) << " |\n";
    }
    return 0;
  }
  if (which == "alpha") {
    const AlphaStability result = alpha_stability(run_scenario(scenario));
    if (result.stable)
      std::cout << "alpha-stable: alpha = " << to_decimal_string(result.alpha) << "\n";
    else
      std::cout << "NOT_STABLE: total share count changes at step " << result.break_step
                << " from " << to_decimal_string(result.total_before) << " to "
                << to_decimal_string(result.total_after) << "\n";
    return 0;
  }
  if (which == "free-lunch") {
    if (!scenario.beta_scenario)
      throw ScenarioError("scenario: free-lunch requires a beta_scenario");
    std::cout << "free lunch at step " << scenario.beta_scenario->start << ": "
              << to_decimal_string(free_lunch(s, *scenario.beta_scenario)) << "\n";
    return 0;
  }
  if (which == "inconsistency") {
    const InconsistencyReport report = inconsistency_report(
        scenario.beta_scenario, s.demography, s.initial_state_assets, s.gamma,
        scenario.horizon);
    std::cout << metric_report_text(report);
    return 0;
  }
  throw ScenarioError("metrics: unknown metric \"" + which + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic pension system simulator and equivalence checker"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "csv";
  bool decimal = false;
  int which_table = 1;
  std::string which_metric = "inconsistency";

  CLI::App* sim = app.add_subcommand("simulate", "Emit the per-step ledger");
  sim->add_option("-f,--file", file, "scenario JSON file")->required();
  sim->add_option("--format", format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
  sim->add_flag("--decimal", decimal, "decimal rendering in CSV (default: exact p/q)");

  CLI::App* table = app.add_subcommand("table", "Reproduce a comparison table");
  table->add_option("-f,--file", file, "scenario JSON file")->required();
  table->add_option("--which", which_table, "1, 2 or 3")->check(CLI::Range(1, 3));

  CLI::App* equiv = app.add_subcommand("equivalence", "Full P<->CB transition sweep");
  equiv->add_option("-f,--file", file, "scenario JSON file")->required();

  CLI::App* metrics = app.add_subcommand("metrics", "Evaluate a sustainability metric");
  metrics->add_option("-f,--file", file, "scenario JSON file")->required();
  metrics->add_option("--which", which_metric, "metric to evaluate")
      ->check(CLI::IsMember(
          {"ror", "primary-balance", "ndc", "alpha", "free-lunch", "inconsistency"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(file, format, decimal);
    if (table->parsed()) return cmd_table(file, which_table);
    if (equiv->parsed()) return cmd_equivalence(file);
    if (metrics->parsed()) return cmd_metrics(file, which_metric);
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
