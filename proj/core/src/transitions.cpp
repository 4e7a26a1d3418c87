#include "pensim/transitions.hpp"

#include "pensim/demography.hpp"

#include <stdexcept>
#include <utility>

namespace pensim {

std::string_view to_string(TransitionDirection direction) {
  return direction == TransitionDirection::PtoCB ? "P->CB" : "CB->P";
}

SystemStatus status_after(const Trajectory& traj, std::int64_t i) {
  const StepRecord& rec = traj.record(i);
  return SystemStatus{rec.worker_assets_after, rec.state_assets_after};
}

namespace {

SystemKind source_of(TransitionDirection d) {
  return d == TransitionDirection::PtoCB ? SystemKind::P : SystemKind::CB;
}

SystemKind target_of(TransitionDirection d) {
  return d == TransitionDirection::PtoCB ? SystemKind::CB : SystemKind::P;
}

SystemSpec with_kind(const SystemSpec& spec, SystemKind kind) {
  return SystemSpec(kind, spec.demography, spec.gamma, spec.initial_state_assets,
                    spec.debt_rate);
}

void validate_directives(const SystemSpec& spec, std::int64_t horizon,
                         std::span<const TransitionDirective> directives) {
  if (spec.kind == SystemKind::C)
    throw std::invalid_argument("transition: System C has no defined transitions");
  if (spec.debt_rate != 0)
    throw std::invalid_argument("transition: only defined for a zero debt rate");
  SystemKind active = spec.kind;
  std::int64_t prev = 0;
  for (const TransitionDirective& d : directives) {
    if (d.at < 1 || d.at > horizon)
      throw std::invalid_argument("transition: switch time must lie in [1, horizon]");
    if (d.at <= prev)
      throw std::invalid_argument("transition: switch times must be strictly increasing");
    if (source_of(d.direction) != active)
      throw std::invalid_argument("transition: directive source does not match the active system");
    active = target_of(d.direction);
    prev = d.at;
  }
}

}  // namespace

Trajectory simulate_with_transitions(const SystemSpec& spec, std::int64_t horizon,
                                     std::span<const TransitionDirective> directives) {
  if (horizon < 1) throw std::invalid_argument("simulate: horizon must be >= 1");
  validate_directives(spec, horizon, directives);

  std::vector<StepRecord> records;
  records.reserve(static_cast<std::size_t>(horizon) + 1);

  SystemKind active = spec.kind;
  std::size_t next_directive = 0;
  Rational worker = 0;
  Rational state = spec.initial_state_assets;

  for (std::int64_t i = 0; i <= horizon; ++i) {
    const bool switching =
        next_directive < directives.size() && directives[next_directive].at == i;

    StepRecord rec;
    rec.step = i;
    rec.contribution = spec.gamma * cohort_size(spec.demography, i + 1);
    const Rational full_benefit = spec.gamma * cohort_size(spec.demography, i + 1);

    if (switching) {
      const TransitionDirection direction = directives[next_directive].direction;
      if (direction == TransitionDirection::PtoCB) {
        // The state pays generation i in full; generation i+1 buys assets.
        rec.benefit = full_benefit;
        rec.bonus = full_benefit;
        state -= rec.bonus;
        worker = rec.contribution;
      } else {
        // Generation i sells its assets and gets the usual bonus; generation
        // i+1 pays its contribution to the state instead of buying assets.
        rec.benefit = full_benefit;
        rec.bonus = full_benefit - worker;
        state -= rec.bonus;
        state += rec.contribution;
        worker = 0;
      }
      active = target_of(direction);
      ++next_directive;
    } else {
      switch (active) {
        case SystemKind::P:
          rec.benefit = full_benefit;
          rec.bonus = 0;
          worker = 0;
          break;
        case SystemKind::CB:
          rec.benefit = full_benefit;
          rec.bonus = full_benefit - worker;
          state -= rec.bonus;
          worker = rec.contribution;
          break;
        case SystemKind::C:
          throw std::logic_error("unreachable");
      }
    }

    rec.worker_assets_after = worker;
    rec.state_assets_after = state;
    records.push_back(std::move(rec));
  }

  // The trajectory's spec keeps the original (source) kind.
  return Trajectory(spec, horizon, std::nullopt, std::move(records));
}

Trajectory simulate_with_transition(const SystemSpec& spec, std::int64_t horizon,
                                    const TransitionDirective& directive) {
  return simulate_with_transitions(spec, horizon, {&directive, 1});
}

std::int64_t EquivalenceReport::passed_count() const {
  std::int64_t n = 0;
  for (const EquivalenceCheck& c : checks)
    if (c.passed()) ++n;
  return n;
}

EquivalenceReport check_equivalence(const SystemSpec& payg, const SystemSpec& funded_bonus,
                                    std::int64_t horizon) {
  if (payg.kind != SystemKind::P || funded_bonus.kind != SystemKind::CB)
    throw std::invalid_argument("equivalence: expected a (P, CB) spec pair");
  if (payg.demography != funded_bonus.demography || payg.gamma != funded_bonus.gamma ||
      payg.initial_state_assets != funded_bonus.initial_state_assets)
    throw std::invalid_argument("equivalence: specs must share demography, gamma and assets");
  if (payg.debt_rate != 0 || funded_bonus.debt_rate != 0)
    throw std::invalid_argument("equivalence: only defined for a zero debt rate");

  const Trajectory pure_p = simulate(payg, horizon);
  const Trajectory pure_cb = simulate(funded_bonus, horizon);

  EquivalenceReport report;
  for (std::int64_t at = 1; at <= horizon; ++at) {
    for (TransitionDirection direction :
         {TransitionDirection::PtoCB, TransitionDirection::CBtoP}) {
      const bool from_p = direction == TransitionDirection::PtoCB;
      const Trajectory& source = from_p ? pure_p : pure_cb;
      const Trajectory& target = from_p ? pure_cb : pure_p;
      const Trajectory mixed = simulate_with_transition(from_p ? payg : funded_bonus,
                                                        horizon, {at, direction});

      EquivalenceCheck check{at, direction, true, true};
      for (std::int64_t i = 0; i <= horizon; ++i) {
        const StepRecord& rec = mixed.record(i);
        if (rec.contribution != pure_p.contribution_at(i) ||
            rec.contribution != pure_cb.contribution_at(i) ||
            rec.benefit != pure_p.benefit_at(i) || rec.benefit != pure_cb.benefit_at(i))
          check.flows_match = false;
        const Trajectory& status_ref = i < at ? source : target;
        if (status_after(mixed, i) != status_after(status_ref, i))
          check.status_matches = false;
      }
      report.checks.push_back(check);
    }
  }
  return report;
}

}  // namespace pensim
