// transitions.hpp — switching between Systems P and CB mid-run, and the
// exhaustive equivalence check built on top of it.
#pragma once

#include "pensim/engine.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pensim {

enum class TransitionDirection { PtoCB, CBtoP };

std::string_view to_string(TransitionDirection direction);

struct TransitionDirective {
  std::int64_t at = 1;  // switch happens during step `at`, >= 1
  TransitionDirection direction = TransitionDirection::PtoCB;
};

/// Assets of the worker generation and the state after a step.
struct SystemStatus {
  Rational worker_assets;
  Rational state_assets;

  bool operator==(const SystemStatus&) const = default;
};

SystemStatus status_after(const Trajectory& traj, std::int64_t i);

/// Runs spec's system up to the switch step, applies the switchover
/// mechanics during step directive.at, and continues as the target system.
///
/// Switch mechanics at step t:
///   P -> CB: generation t receives its full benefit from the state
///            (recorded entirely as bonus) while generation t+1 buys assets.
///   CB -> P: generation t sells its assets and receives the usual bonus;
///            generation t+1 then pays its contribution to the state
///            instead of buying assets.
///
/// Requires debt_rate = 0, spec.kind matching the directive's source system,
/// and 1 <= at <= horizon. Throws std::invalid_argument otherwise.
Trajectory simulate_with_transition(const SystemSpec& spec, std::int64_t horizon,
                                    const TransitionDirective& directive);

/// Chained switches; times must be strictly increasing and each directive's
/// source must match the system active at that point.
Trajectory simulate_with_transitions(const SystemSpec& spec, std::int64_t horizon,
                                     std::span<const TransitionDirective> directives);

struct EquivalenceCheck {
  std::int64_t at = 0;
  TransitionDirection direction = TransitionDirection::PtoCB;
  bool flows_match = false;   // contributions and benefits vs both pure systems
  bool status_matches = false;  // status vs pure source before / pure target from `at`

  bool passed() const { return flows_match && status_matches; }
};

struct EquivalenceReport {
  std::vector<EquivalenceCheck> checks;

  std::int64_t passed_count() const;
  std::int64_t total_count() const { return static_cast<std::int64_t>(checks.size()); }
  bool all_passed() const { return passed_count() == total_count(); }
};

/// For every transition time 1..horizon and both directions, checks that the
/// transitioned trajectory has exactly the pure systems' flows at every step
/// and exactly the pure target's status from the switch onward.
/// Both specs must share demography, gamma and initial assets, have
/// debt_rate = 0, and be of kind P and CB respectively.
EquivalenceReport check_equivalence(const SystemSpec& payg, const SystemSpec& funded_bonus,
                                    std::int64_t horizon);

}  // namespace pensim
