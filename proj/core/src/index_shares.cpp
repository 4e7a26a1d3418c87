#include "pensim/index_shares.hpp"

#include "pensim/demography.hpp"

#include <stdexcept>

namespace pensim {

Rational index_share_value(const DemographyParams& params, std::int64_t i) {
  if (i < 0) throw std::invalid_argument("index_share_value: time must be >= 0");
  return cohort_size(params, i + 1);
}

namespace {

void require_zero_debt_rate(const Trajectory& traj, const char* what) {
  if (traj.spec().debt_rate != 0)
    throw std::invalid_argument(std::string(what) + ": requires a zero debt rate");
}

}  // namespace

IndexShareLedger holdings_trace(const Trajectory& traj) {
  require_zero_debt_rate(traj, "holdings_trace");
  const DemographyParams& demo = traj.spec().demography;

  IndexShareLedger ledger;
  ledger.holdings.reserve(traj.records().size());

  Rational state_shares = 0;
  Rational prev_state_assets = traj.spec().initial_state_assets;
  Rational prev_value = cohort_size(demo, 0);  // share value at time -1 is a_0

  for (const StepRecord& rec : traj.records()) {
    const Rational value = index_share_value(demo, rec.step);

    // Whatever the incoming generation paid beyond its asset purchase
    // bought claims at the current share value.
    const Rational participants = (rec.contribution - rec.worker_assets_after) / value;

    // State side. Contributions routed to the state redeem its shares at the
    // current value, capped at the position held; bonus payments beyond the
    // appreciation of the position buy shares.
    const Rational routed = rec.state_assets_after - prev_state_assets + rec.bonus;
    const Rational appreciation = state_shares * (value - prev_value);
    state_shares += (rec.bonus - appreciation) / value;
    Rational redeemed = routed / value;
    if (redeemed > state_shares) redeemed = state_shares;
    if (redeemed > 0) state_shares -= redeemed;

    ledger.holdings.push_back(ShareHoldings{participants, state_shares});
    prev_state_assets = rec.state_assets_after;
    prev_value = value;
  }
  return ledger;
}

AlphaStability alpha_stability(const Trajectory& traj) {
  const IndexShareLedger ledger = holdings_trace(traj);

  AlphaStability result;
  result.alpha = ledger.holdings.front().total();
  result.stable = true;
  for (std::size_t k = 1; k < ledger.holdings.size(); ++k) {
    const Rational total = ledger.holdings[k].total();
    if (total != result.alpha) {
      result.stable = false;
      result.break_step = static_cast<std::int64_t>(k);
      result.total_before = ledger.holdings[k - 1].total();
      result.total_after = total;
      break;
    }
  }
  return result;
}

Rational total_state_position(const Trajectory& traj, std::int64_t i) {
  require_zero_debt_rate(traj, "total_state_position");
  const IndexShareLedger ledger = holdings_trace(traj);
  const ShareHoldings& holdings = ledger.holdings.at(static_cast<std::size_t>(traj.record(i).step));
  return traj.state_assets_after(i) +
         holdings.state * index_share_value(traj.spec().demography, i);
}

}  // namespace pensim
