// engine.hpp — step-by-step simulation of Systems P, C and CB.
//
// The ledger is time-indexed: at time i the living generations are i
// (pensioners) and i+1 (workers). The contributor at time i is therefore
// generation i+1, paying gamma * a_{i+1} in every system.
#pragma once

#include "pensim/system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pensim {

/// One ledger row.
struct StepRecord {
  std::int64_t step = 0;
  Rational contribution;        // paid by generation step+1
  Rational benefit;             // received by generation step, bonus included
  Rational bonus;               // state-paid part of the benefit (0 for P, C)
  Rational worker_assets_after; // assets of generation step+1 after the step
  Rational state_assets_after;

  bool operator==(const StepRecord&) const = default;
};

/// Immutable simulated ledger for steps 0..horizon.
class Trajectory {
 public:
  Trajectory(SystemSpec spec, std::int64_t horizon,
             std::optional<PolicyScenario> scenario,
             std::vector<StepRecord> records);

  const SystemSpec& spec() const { return spec_; }
  std::int64_t horizon() const { return horizon_; }
  const std::optional<PolicyScenario>& scenario() const { return scenario_; }
  const std::vector<StepRecord>& records() const { return records_; }

  /// Throws std::out_of_range unless 0 <= i <= horizon.
  const StepRecord& record(std::int64_t i) const;

  Rational contribution_at(std::int64_t i) const { return record(i).contribution; }
  Rational benefit_at(std::int64_t i) const { return record(i).benefit; }
  Rational bonus_at(std::int64_t i) const { return record(i).bonus; }
  Rational worker_assets_after(std::int64_t i) const { return record(i).worker_assets_after; }
  Rational state_assets_after(std::int64_t i) const { return record(i).state_assets_after; }

 private:
  SystemSpec spec_;
  std::int64_t horizon_;
  std::optional<PolicyScenario> scenario_;
  std::vector<StepRecord> records_;
};

/// Runs the system for steps 0..horizon (horizon >= 1).
/// With debt_rate > 0, negative state assets accrue interest at the start of
/// each step, before that step's flows.
/// Throws std::invalid_argument if a scenario is present with
/// start outside [1, horizon].
Trajectory simulate(const SystemSpec& spec, std::int64_t horizon,
                    std::optional<PolicyScenario> scenario = std::nullopt);

// Closed-form per-step flows. Valid for any i >= 0, including beyond a
// trajectory's horizon; flows never depend on debt_rate.
Rational scheduled_contribution(const SystemSpec& spec,
                                const std::optional<PolicyScenario>& scenario,
                                std::int64_t i);
Rational scheduled_benefit(const SystemSpec& spec,
                           const std::optional<PolicyScenario>& scenario,
                           std::int64_t i);
Rational scheduled_bonus(const SystemSpec& spec,
                         const std::optional<PolicyScenario>& scenario,
                         std::int64_t i);

}  // namespace pensim
