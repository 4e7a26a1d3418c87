// index_shares.hpp — index-share accounting and alpha-stability.
//
// One index share is a claim whose value at time i equals the working
// population a_{i+1}. Holdings are reconstructed from ledger flows:
//
//   participants(i) = (contribution(i) - worker_assets_after(i)) / value(i)
//       the part of the incoming generation's payment that bought a claim
//       rather than real assets;
//   state(i) evolves from the state's pension outflows: bonus payments in
//       excess of the appreciation of its current position buy shares at the
//       current value, and contributions routed to the state redeem shares
//       (capped at the position held, so plain surpluses are ordinary asset
//       transfers, not short positions).
//
// This reproduces the structural holdings (P_gamma: gamma/0, CB_gamma:
// 0/gamma, C: 0/0), is invariant under P<->CB switchovers, and detects
// scale changes as a break in the total.
#pragma once

#include "pensim/engine.hpp"

#include <cstdint>
#include <vector>

namespace pensim {

struct ShareHoldings {
  Rational participants;  // held by the worker generation after the step
  Rational state;

  Rational total() const { return participants + state; }
  bool operator==(const ShareHoldings&) const = default;
};

/// The indicator an index share is valued against. Only the working
/// population is implemented.
enum class ShareIndicator { WorkingPopulation };

struct IndexShareLedger {
  ShareIndicator indicator = ShareIndicator::WorkingPopulation;
  std::vector<ShareHoldings> holdings;  // one entry per step 0..horizon
};

/// Value of one index share at time i: the working population a_{i+1}.
Rational index_share_value(const DemographyParams& params, std::int64_t i);

/// Reconstructs per-step share holdings from a trajectory.
/// Requires debt_rate = 0.
IndexShareLedger holdings_trace(const Trajectory& traj);

/// Result of the alpha-stability decision: either the constant total share
/// count, or the first step at which the total changed.
struct AlphaStability {
  bool stable = false;
  Rational alpha;            // meaningful when stable
  std::int64_t break_step = -1;  // first step whose total differs (unstable)
  Rational total_before;     // total at break_step - 1 (unstable)
  Rational total_after;      // total at break_step (unstable)
};

AlphaStability alpha_stability(const Trajectory& traj);

/// State assets plus the value of state-held shares. Equals the initial
/// state assets at every step for both P and CB. Requires debt_rate = 0.
Rational total_state_position(const Trajectory& traj, std::int64_t i);

}  // namespace pensim
