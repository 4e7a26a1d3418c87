// render.hpp — deterministic text output: CSV ledgers, markdown tables,
// verification and metric reports.
#pragma once

#include "pensim/engine.hpp"
#include "pensim/index_shares.hpp"
#include "pensim/metrics.hpp"
#include "pensim/transitions.hpp"

#include <string>
#include <vector>

namespace pensim {

enum class NumberStyle {
  Exact,    // "p/q"; CSV in this style round-trips losslessly
  Decimal,  // exact decimal when finite, "p/q" otherwise
};

std::string format_number(const Rational& value, NumberStyle style);

/// Columns: i, contribution, benefit, bonus, worker_assets_after,
/// state_assets_after, shares_participants, shares_state.
std::string ledger_csv(const Trajectory& traj, NumberStyle style);

/// Parses a ledger CSV produced by ledger_csv back into rational rows.
/// Throws std::invalid_argument on malformed input.
std::vector<std::vector<Rational>> parse_ledger_csv(const std::string& csv);

std::string ledger_markdown(const Trajectory& traj);

/// The comparison tables:
///   1 — contributions, benefits and state assets across P, C and CB;
///   2 — worker and state assets, P vs CB;
///   3 — the gamma-scaled variants P_gamma vs CB_gamma.
/// Symbolic rows first, then numeric rows for each simulated step.
std::string comparison_table(int which, const DemographyParams& demography,
                             const Rational& initial_state_assets, const Rational& gamma,
                             std::int64_t horizon);

std::string equivalence_report_text(const EquivalenceReport& report);

std::string metric_report_text(const InconsistencyReport& report);

}  // namespace pensim
