#include "pensim/engine.hpp"

#include "pensim/demography.hpp"

#include <stdexcept>
#include <utility>

namespace pensim {

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::P: return "P";
    case SystemKind::C: return "C";
    case SystemKind::CB: return "CB";
  }
  throw std::logic_error("unreachable");
}

PolicyScenario::PolicyScenario(Rational beta_, std::int64_t start_)
    : beta(std::move(beta_)), start(start_) {
  if (beta <= 1) throw std::invalid_argument("scenario: beta must exceed 1");
  if (start < 1) throw std::invalid_argument("scenario: start must be >= 1");
}

SystemSpec::SystemSpec(SystemKind kind_, DemographyParams demography_, Rational gamma_,
                       Rational initial_state_assets_, Rational debt_rate_)
    : kind(kind_),
      gamma(std::move(gamma_)),
      initial_state_assets(std::move(initial_state_assets_)),
      debt_rate(std::move(debt_rate_)),
      demography(std::move(demography_)) {
  if (gamma <= 0) throw std::invalid_argument("system: gamma must be positive");
  if (debt_rate < 0) throw std::invalid_argument("system: debt rate must be non-negative");
}

Trajectory::Trajectory(SystemSpec spec, std::int64_t horizon,
                       std::optional<PolicyScenario> scenario,
                       std::vector<StepRecord> records)
    : spec_(std::move(spec)),
      horizon_(horizon),
      scenario_(std::move(scenario)),
      records_(std::move(records)) {}

const StepRecord& Trajectory::record(std::int64_t i) const {
  if (i < 0 || i > horizon_)
    throw std::out_of_range("trajectory: step " + std::to_string(i) + " outside [0, " +
                            std::to_string(horizon_) + "]");
  return records_[static_cast<std::size_t>(i)];
}

namespace {

// Generation-anchored scale: generations start+1 onward are scaled by beta.
Rational generation_scale(const std::optional<PolicyScenario>& scenario, std::int64_t gen) {
  if (scenario && gen >= scenario->start + 1) return scenario->beta;
  return Rational(1);
}

void validate_scenario(const std::optional<PolicyScenario>& scenario, std::int64_t horizon) {
  if (scenario && (scenario->start < 1 || scenario->start > horizon))
    throw std::invalid_argument("scenario: start must lie in [1, horizon]");
}

}  // namespace

Rational scheduled_contribution(const SystemSpec& spec,
                                const std::optional<PolicyScenario>& scenario,
                                std::int64_t i) {
  // Generation i+1 contributes at time i, in every system.
  return generation_scale(scenario, i + 1) * spec.gamma * cohort_size(spec.demography, i + 1);
}

Rational scheduled_benefit(const SystemSpec& spec,
                           const std::optional<PolicyScenario>& scenario,
                           std::int64_t i) {
  const Rational scale = generation_scale(scenario, i);
  switch (spec.kind) {
    case SystemKind::P:
    case SystemKind::CB:
      return scale * spec.gamma * cohort_size(spec.demography, i + 1);
    case SystemKind::C:
      // Generation 0 never bought assets and receives nothing.
      if (i == 0) return 0;
      return scale * spec.gamma * cohort_size(spec.demography, i);
  }
  throw std::logic_error("unreachable");
}

Rational scheduled_bonus(const SystemSpec& spec,
                         const std::optional<PolicyScenario>& scenario,
                         std::int64_t i) {
  if (spec.kind != SystemKind::CB) return 0;
  // At time 0 the whole pension of generation 0 is state-paid.
  if (i == 0) return spec.gamma * cohort_size(spec.demography, 1);
  const Rational scale = generation_scale(scenario, i);
  return scale * spec.gamma *
         (cohort_size(spec.demography, i + 1) - cohort_size(spec.demography, i));
}

Trajectory simulate(const SystemSpec& spec, std::int64_t horizon,
                    std::optional<PolicyScenario> scenario) {
  if (horizon < 1) throw std::invalid_argument("simulate: horizon must be >= 1");
  validate_scenario(scenario, horizon);

  std::vector<StepRecord> records;
  records.reserve(static_cast<std::size_t>(horizon) + 1);

  Rational worker = 0;
  Rational state = spec.initial_state_assets;

  for (std::int64_t i = 0; i <= horizon; ++i) {
    if (spec.debt_rate > 0 && state < 0) state += spec.debt_rate * state;

    StepRecord rec;
    rec.step = i;
    rec.contribution = scheduled_contribution(spec, scenario, i);

    switch (spec.kind) {
      case SystemKind::P:
        // Contribution routed to the pensioners; any surplus goes to the state.
        rec.benefit = scheduled_benefit(spec, scenario, i);
        rec.bonus = 0;
        state += rec.contribution - rec.benefit;
        worker = 0;
        break;
      case SystemKind::C:
        // Workers buy assets; pensioners sell the assets bought a step ago.
        rec.benefit = worker;
        rec.bonus = 0;
        worker = rec.contribution;
        break;
      case SystemKind::CB:
        rec.benefit = scheduled_benefit(spec, scenario, i);
        rec.bonus = rec.benefit - worker;  // asset sale covers the rest
        state -= rec.bonus;
        worker = rec.contribution;
        break;
    }

    rec.worker_assets_after = worker;
    rec.state_assets_after = state;
    records.push_back(std::move(rec));
  }

  return Trajectory(spec, horizon, std::move(scenario), std::move(records));
}

}  // namespace pensim
