// metrics.hpp — sustainability metrics and the beta-scaling scenario used
// to show they disagree on equivalent systems.
#pragma once

#include "pensim/engine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pensim {

enum class ReturnView {
  Individual,  // benefit received / contribution paid - 1
  Systemic     // return attributable to asset holdings alone
};

/// Rate of return experienced by a generation (>= 1; generation 0 never
/// contributes, its return is undefined). The generation's benefit step must
/// lie within the trajectory horizon.
Rational rate_of_return(const Trajectory& traj, std::int64_t generation, ReturnView view);

/// Simulates spec under the beta-scaling scenario. Requires debt_rate = 0
/// and 1 <= scenario.start <= horizon.
Trajectory apply_beta(const SystemSpec& spec, const PolicyScenario& scenario,
                      std::int64_t horizon);

/// The state's pension-related net flow at step i: zero for P and C,
/// minus the bonus for CB.
Rational primary_balance(const Trajectory& traj, std::int64_t i);

/// One-period notional balance at step i (1 <= i <= horizon): incoming
/// contribution minus the pensioner generation's claim. Zero everywhere for
/// baseline systems; positive exactly at the scaling step under beta.
Rational ndc_balance(const Trajectory& traj, std::int64_t i);

/// The one-off surplus (beta-1) * gamma * a_{start+1} a scaled System P
/// could pay out immediately instead of banking. P only.
Rational free_lunch(const SystemSpec& spec, const PolicyScenario& scenario);

enum class Verdict { Improves, Worsens, Neutral };

std::string_view to_string(Verdict verdict);

/// One metric evaluated against its baseline. Sign convention: Improves
/// means the state position rises relative to baseline at the evaluation
/// step, Worsens that it falls.
struct MetricReport {
  std::string name;
  std::vector<Rational> values;  // per-step deltas vs baseline
  Verdict verdict = Verdict::Neutral;
};

struct InconsistencyReport {
  std::vector<MetricReport> metrics;
  bool flows_identical = false;  // P and CB contributions/benefits match per step
};

/// Runs the scenario on both P and CB with shared parameters and evaluates
/// each metric. Without a scenario all verdicts are Neutral.
InconsistencyReport inconsistency_report(const std::optional<PolicyScenario>& scenario,
                                         const DemographyParams& demography,
                                         const Rational& initial_state_assets,
                                         const Rational& gamma, std::int64_t horizon);

}  // namespace pensim
