#include "pensim/metrics.hpp"

#include "pensim/demography.hpp"

#include <stdexcept>
#include <utility>

namespace pensim {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Improves: return "IMPROVES";
    case Verdict::Worsens: return "WORSENS";
    case Verdict::Neutral: return "NEUTRAL";
  }
  throw std::logic_error("unreachable");
}

Rational rate_of_return(const Trajectory& traj, std::int64_t generation, ReturnView view) {
  if (generation < 1)
    throw std::invalid_argument(
        "rate_of_return: generation 0 contributes nothing; its return is undefined");
  // Generation n contributes at time n-1 and receives its benefit at time n.
  const Rational contribution = traj.contribution_at(generation - 1);
  Rational received = traj.benefit_at(generation);
  if (view == ReturnView::Systemic && traj.spec().kind != SystemKind::P) {
    // Asset-only view: strip the state transfer. For P the transfer
    // mechanism is the system itself, so both views coincide.
    received -= traj.bonus_at(generation);
  }
  return received / contribution - 1;
}

Trajectory apply_beta(const SystemSpec& spec, const PolicyScenario& scenario,
                      std::int64_t horizon) {
  if (spec.debt_rate != 0)
    throw std::invalid_argument("apply_beta: requires a zero debt rate");
  return simulate(spec, horizon, scenario);
}

Rational primary_balance(const Trajectory& traj, std::int64_t i) {
  return -traj.bonus_at(i);
}

Rational ndc_balance(const Trajectory& traj, std::int64_t i) {
  if (i < 1) throw std::invalid_argument("ndc_balance: step must be >= 1");
  return traj.contribution_at(i) - traj.benefit_at(i);
}

Rational free_lunch(const SystemSpec& spec, const PolicyScenario& scenario) {
  if (spec.kind != SystemKind::P)
    throw std::invalid_argument("free_lunch: defined for System P only");
  return (scenario.beta - 1) * spec.gamma * cohort_size(spec.demography, scenario.start + 1);
}

namespace {

Verdict verdict_of(const Rational& delta) {
  if (delta > 0) return Verdict::Improves;
  if (delta < 0) return Verdict::Worsens;
  return Verdict::Neutral;
}

}  // namespace

InconsistencyReport inconsistency_report(const std::optional<PolicyScenario>& scenario,
                                         const DemographyParams& demography,
                                         const Rational& initial_state_assets,
                                         const Rational& gamma, std::int64_t horizon) {
  const SystemSpec payg(SystemKind::P, demography, gamma, initial_state_assets);
  const SystemSpec funded(SystemKind::CB, demography, gamma, initial_state_assets);

  const Trajectory base_p = simulate(payg, horizon);
  const Trajectory base_cb = simulate(funded, horizon);
  const Trajectory scen_p = simulate(payg, horizon, scenario);
  const Trajectory scen_cb = simulate(funded, horizon, scenario);

  InconsistencyReport report;

  report.flows_identical = true;
  for (std::int64_t i = 0; i <= horizon; ++i) {
    if (scen_p.contribution_at(i) != scen_cb.contribution_at(i) ||
        scen_p.benefit_at(i) != scen_cb.benefit_at(i))
      report.flows_identical = false;
  }

  auto state_delta = [horizon](const Trajectory& scen, const Trajectory& base) {
    MetricReport m;
    for (std::int64_t i = 0; i <= horizon; ++i)
      m.values.push_back(scen.state_assets_after(i) - base.state_assets_after(i));
    m.verdict = verdict_of(m.values.back());
    return m;
  };

  MetricReport assets_p = state_delta(scen_p, base_p);
  assets_p.name = "state-assets-p";
  report.metrics.push_back(std::move(assets_p));

  MetricReport assets_cb = state_delta(scen_cb, base_cb);
  assets_cb.name = "state-assets-cb";
  report.metrics.push_back(std::move(assets_cb));

  // Primary-balance effect on CB: the change in the state's pension flow.
  MetricReport pb;
  pb.name = "primary-balance-cb";
  Rational pb_sum = 0;
  for (std::int64_t i = 0; i <= horizon; ++i) {
    const Rational delta = primary_balance(scen_cb, i) - primary_balance(base_cb, i);
    pb_sum += delta;
    pb.values.push_back(delta);
  }
  pb.verdict = verdict_of(pb_sum);
  report.metrics.push_back(std::move(pb));

  // Notional balance of P at the scaling step.
  MetricReport ndc;
  ndc.name = "ndc-balance-p";
  for (std::int64_t i = 1; i <= horizon; ++i)
    ndc.values.push_back(ndc_balance(scen_p, i) - ndc_balance(base_p, i));
  ndc.verdict = scenario ? verdict_of(ndc.values[static_cast<std::size_t>(scenario->start - 1)])
                         : Verdict::Neutral;
  report.metrics.push_back(std::move(ndc));

  return report;
}

}  // namespace pensim
