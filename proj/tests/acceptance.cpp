// Acceptance suite: one pass/fail line per criterion. All numeric checks are
// exact rational equality; each criterion also carries a wall-clock budget.

#include "pensim/demography.hpp"
#include "pensim/engine.hpp"
#include "pensim/index_shares.hpp"
#include "pensim/metrics.hpp"
#include "pensim/render.hpp"
#include "pensim/scenario_file.hpp"
#include "pensim/transitions.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace pensim;

namespace {

const DemographyParams kDemo(100, Rational(1, 10));

SystemSpec spec_of(SystemKind kind, Rational gamma = 1, Rational assets = 1000,
                   Rational r_debt = 0) {
  return SystemSpec(kind, kDemo, gamma, assets, r_debt);
}

Rational a(std::int64_t i) { return cohort_size(kDemo, i); }

int g_failures = 0;

void run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("[%s] criterion %2d: %s (%.3fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), elapsed, detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

bool criterion_table1(std::string& detail) {
  const std::int64_t T = 10;
  const Trajectory p = simulate(spec_of(SystemKind::P), T);
  const Trajectory c = simulate(spec_of(SystemKind::C), T);
  const Trajectory cb = simulate(spec_of(SystemKind::CB), T);
  for (std::int64_t i = 0; i <= T; ++i) {
    if (p.contribution_at(i) != a(i + 1) || c.contribution_at(i) != a(i + 1) ||
        cb.contribution_at(i) != a(i + 1)) {
      detail = "contribution mismatch at i=" + std::to_string(i);
      return false;
    }
    if (i > 0 && (p.benefit_at(i) != a(i + 1) || c.benefit_at(i) != a(i) ||
                  cb.benefit_at(i) != a(i + 1))) {
      detail = "benefit mismatch at i=" + std::to_string(i);
      return false;
    }
    if (p.state_assets_after(i) != 1000 || c.state_assets_after(i) != 1000 ||
        cb.state_assets_after(i) != 1000 - a(i + 1)) {
      detail = "state assets mismatch at i=" + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool criterion_table2(std::string& detail) {
  const std::int64_t T = 10;
  const Trajectory p = simulate(spec_of(SystemKind::P), T);
  const Trajectory cb = simulate(spec_of(SystemKind::CB), T);
  for (std::int64_t i = 0; i <= T; ++i) {
    if (p.worker_assets_after(i) != 0 || cb.worker_assets_after(i) != a(i + 1) ||
        p.state_assets_after(i) != 1000 || cb.state_assets_after(i) != 1000 - a(i + 1) ||
        p.worker_assets_after(i) + p.state_assets_after(i) !=
            cb.worker_assets_after(i) + cb.state_assets_after(i)) {
      detail = "asset mismatch at i=" + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool criterion_equivalence_sweep(std::string& detail) {
  const EquivalenceReport report =
      check_equivalence(spec_of(SystemKind::P), spec_of(SystemKind::CB), 50);
  detail = std::to_string(report.passed_count()) + "/" + std::to_string(report.total_count()) +
           " checks passed";
  return report.total_count() == 100 && report.all_passed();
}

bool criterion_gamma_linearity(std::string& detail) {
  const std::int64_t T = 10;
  const Trajectory unit_p = simulate(spec_of(SystemKind::P), T);
  const Trajectory unit_cb = simulate(spec_of(SystemKind::CB), T);
  for (const Rational& gamma :
       {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)}) {
    for (SystemKind kind : {SystemKind::P, SystemKind::CB}) {
      const Trajectory& unit = kind == SystemKind::P ? unit_p : unit_cb;
      const Trajectory scaled = simulate(spec_of(kind, gamma), T);
      for (std::int64_t i = 0; i <= T; ++i) {
        if (scaled.contribution_at(i) != gamma * unit.contribution_at(i) ||
            scaled.benefit_at(i) != gamma * unit.benefit_at(i) ||
            scaled.bonus_at(i) != gamma * unit.bonus_at(i) ||
            scaled.worker_assets_after(i) != gamma * unit.worker_assets_after(i) ||
            scaled.state_assets_after(i) - 1000 !=
                gamma * (unit.state_assets_after(i) - 1000)) {
          detail = "scaling mismatch at i=" + std::to_string(i);
          return false;
        }
      }
      const AlphaStability alpha = alpha_stability(scaled);
      if (!alpha.stable || alpha.alpha != gamma) {
        detail = "alpha mismatch for kind " + std::string(to_string(kind));
        return false;
      }
    }
  }
  return true;
}

bool criterion_beta_identities(std::string& detail) {
  const std::int64_t T = 20;
  const PolicyScenario scenario(Rational(3, 2), 2);

  const Trajectory scaled_p = apply_beta(spec_of(SystemKind::P), scenario, T);
  if (scaled_p.state_assets_after(2) - 1000 != (scenario.beta - 1) * a(3)) {
    detail = "P surplus mismatch";
    return false;
  }

  const Trajectory scaled_cb = apply_beta(spec_of(SystemKind::CB), scenario, T);
  const Trajectory base_cb = simulate(spec_of(SystemKind::CB), T);
  // Independent oracle: accumulate the scaled bonus schedule directly.
  Rational oracle = 1000;
  for (std::int64_t j = 0; j <= T; ++j) {
    if (j == 0)
      oracle -= a(1);
    else if (j <= 2)
      oracle -= a(j + 1) - a(j);
    else
      oracle -= scenario.beta * (a(j + 1) - a(j));
    if (scaled_cb.state_assets_after(j) != oracle) {
      detail = "CB brute-force mismatch at j=" + std::to_string(j);
      return false;
    }
    if (j > 2 && scaled_cb.state_assets_after(j) - base_cb.state_assets_after(j) !=
                     -(scenario.beta - 1) * (a(j + 1) - a(3))) {
      detail = "CB shortfall identity mismatch at j=" + std::to_string(j);
      return false;
    }
  }
  return true;
}

bool criterion_inconsistency(std::string& detail) {
  const InconsistencyReport report =
      inconsistency_report(PolicyScenario(Rational(3, 2), 2), kDemo, 1000, 1, 20);
  if (!report.flows_identical) {
    detail = "flows differ";
    return false;
  }
  const Rational delta_p = report.metrics[0].values.back();
  const Rational delta_cb = report.metrics[1].values.back();
  if (!(delta_p > 0 && delta_cb < 0)) {
    detail = "state-asset deltas do not have opposite signs";
    return false;
  }
  return report.metrics[0].verdict == Verdict::Improves &&
         report.metrics[1].verdict == Verdict::Worsens;
}

bool criterion_state_position(std::string& detail) {
  struct Params { Rational gamma; Rational assets; };
  for (const Params& params :
       {Params{1, 1000}, Params{3, 1000}, Params{Rational(1, 2), -50}}) {
    for (SystemKind kind : {SystemKind::P, SystemKind::CB}) {
      const Trajectory traj = simulate(spec_of(kind, params.gamma, params.assets), 15);
      for (std::int64_t i = 0; i <= 15; ++i) {
        if (total_state_position(traj, i) != params.assets) {
          detail = "position != A for kind " + std::string(to_string(kind));
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_rate_of_return(std::string& detail) {
  const std::int64_t T = 20;
  const Trajectory p = simulate(spec_of(SystemKind::P), T);
  const Trajectory c = simulate(spec_of(SystemKind::C), T);
  const Trajectory cb = simulate(spec_of(SystemKind::CB), T);
  for (std::int64_t n = 1; n <= 20; ++n) {
    if (rate_of_return(p, n, ReturnView::Individual) != Rational(1, 10) ||
        rate_of_return(cb, n, ReturnView::Individual) != Rational(1, 10) ||
        rate_of_return(c, n, ReturnView::Individual) != 0 ||
        rate_of_return(cb, n, ReturnView::Systemic) != 0) {
      detail = "return mismatch for generation " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool criterion_debt_cost(std::string& detail) {
  const std::int64_t T = 40;
  const Trajectory free = simulate(spec_of(SystemKind::CB, 1, 200), T);
  const Trajectory costly = simulate(spec_of(SystemKind::CB, 1, 200, Rational(1, 20)), T);
  bool entered_in_debt = false;
  for (std::int64_t i = 0; i <= T; ++i) {
    if (entered_in_debt) {
      if (costly.state_assets_after(i) >= free.state_assets_after(i)) {
        detail = "no strict drop at i=" + std::to_string(i);
        return false;
      }
    } else if (costly.state_assets_after(i) != free.state_assets_after(i)) {
      detail = "premature divergence at i=" + std::to_string(i);
      return false;
    }
    if (free.state_assets_after(i) < 0) entered_in_debt = true;
  }
  if (!entered_in_debt) {
    detail = "never went into debt";
    return false;
  }
  return true;
}

std::string run_cli(const std::string& args) {
  const std::string command = std::string(PENSIM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run CLI");
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), n);
  pclose(pipe);
  return output;
}

bool criterion_determinism(std::string& detail) {
  const char* path = "acceptance_scenario.json";
  {
    std::ofstream out(path);
    out << R"({"demography": {"a0": "100", "g": "1/10"},
               "system": {"kind": "CB", "gamma": "7/3", "A": "1000"},
               "horizon": 12})";
  }
  const std::string first = run_cli(std::string("simulate -f ") + path);
  const std::string second = run_cli(std::string("simulate -f ") + path);
  std::remove(path);
  if (first.empty()) {
    detail = "no CLI output";
    return false;
  }
  if (first != second) {
    detail = "outputs differ between runs";
    return false;
  }

  // Exact-mode CSV restores every rational.
  const Trajectory traj = simulate(spec_of(SystemKind::CB, Rational(7, 3)), 12);
  const auto rows = parse_ledger_csv(first);
  if (rows.size() != 13) {
    detail = "unexpected row count";
    return false;
  }
  for (std::int64_t i = 0; i <= 12; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (row[1] != traj.contribution_at(i) || row[2] != traj.benefit_at(i) ||
        row[3] != traj.bonus_at(i) || row[4] != traj.worker_assets_after(i) ||
        row[5] != traj.state_assets_after(i)) {
      detail = "round-trip mismatch at i=" + std::to_string(i);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "Table-1 reproduction (P/C/CB ledgers)", 1.0, criterion_table1);
  run_criterion(2, "Table-2 reproduction (worker vs state assets)", 1.0, criterion_table2);
  run_criterion(3, "Equivalence sweep, T=50, both directions", 5.0,
                criterion_equivalence_sweep);
  run_criterion(4, "Gamma-linearity and gamma-stability", 1.0, criterion_gamma_linearity);
  run_criterion(5, "Beta-scenario identities (surplus and shortfall)", 1.0,
                criterion_beta_identities);
  run_criterion(6, "Inconsistency demonstration (opposite signs, same flows)", 1.0,
                criterion_inconsistency);
  run_criterion(7, "Index-share conservation (total state position = A)", 1.0,
                criterion_state_position);
  run_criterion(8, "Rate-of-return table", 1.0, criterion_rate_of_return);
  run_criterion(9, "Debt-cost extension (strict drop once indebted)", 1.0,
                criterion_debt_cost);
  run_criterion(10, "Determinism and exact CSV round-trip", 1.0, criterion_determinism);

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
