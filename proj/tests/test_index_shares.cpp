#include "pensim/index_shares.hpp"

#include "pensim/demography.hpp"
#include "pensim/metrics.hpp"
#include "pensim/transitions.hpp"

#include <doctest.h>

#include <random>

using namespace pensim;

namespace {

const DemographyParams kDemo(100, Rational(1, 10));

SystemSpec spec_of(SystemKind kind, Rational gamma = 1, Rational assets = 1000) {
  return SystemSpec(kind, kDemo, gamma, assets);
}

}  // namespace

TEST_CASE("index share value is the working population") {
  CHECK(index_share_value(kDemo, 0) == 110);
  CHECK(index_share_value(kDemo, 3) == Rational(14641, 100));
  const DemographyParams flat(100, 0);
  CHECK(index_share_value(flat, 9) == 100);
}

TEST_CASE("baseline holdings: P with participants, CB with the state, C empty") {
  const IndexShareLedger p = holdings_trace(simulate(spec_of(SystemKind::P), 8));
  const IndexShareLedger cb = holdings_trace(simulate(spec_of(SystemKind::CB), 8));
  const IndexShareLedger c = holdings_trace(simulate(spec_of(SystemKind::C), 8));
  for (std::size_t i = 0; i <= 8; ++i) {
    CHECK(p.holdings[i] == ShareHoldings{1, 0});
    CHECK(cb.holdings[i] == ShareHoldings{0, 1});
    CHECK(c.holdings[i] == ShareHoldings{0, 0});
  }
}

TEST_CASE("alpha-stability of the baseline systems") {
  const AlphaStability p2 = alpha_stability(simulate(spec_of(SystemKind::P, 2), 10));
  CHECK(p2.stable);
  CHECK(p2.alpha == 2);

  const AlphaStability cb = alpha_stability(simulate(spec_of(SystemKind::CB, Rational(7, 3)), 10));
  CHECK(cb.stable);
  CHECK(cb.alpha == Rational(7, 3));

  const AlphaStability c = alpha_stability(simulate(spec_of(SystemKind::C), 10));
  CHECK(c.stable);
  CHECK(c.alpha == 0);
}

TEST_CASE("beta-scaled P is not stable and jumps at the scaling step") {
  const Trajectory traj =
      apply_beta(spec_of(SystemKind::P), PolicyScenario(Rational(3, 2), 2), 10);
  const AlphaStability result = alpha_stability(traj);
  CHECK_FALSE(result.stable);
  CHECK(result.break_step == 2);
  CHECK(result.total_before == 1);
  CHECK(result.total_after == Rational(3, 2));
}

TEST_CASE("beta-scaled CB is not stable") {
  const Trajectory traj =
      apply_beta(spec_of(SystemKind::CB), PolicyScenario(Rational(3, 2), 2), 10);
  CHECK_FALSE(alpha_stability(traj).stable);
}

TEST_CASE("total state position equals initial assets for P and CB") {
  struct Params { Rational gamma; Rational assets; };
  for (const Params& p : {Params{1, 1000}, Params{3, 1000}, Params{Rational(1, 2), -50}}) {
    const Trajectory traj_p = simulate(spec_of(SystemKind::P, p.gamma, p.assets), 12);
    const Trajectory traj_cb = simulate(spec_of(SystemKind::CB, p.gamma, p.assets), 12);
    for (std::int64_t i = 0; i <= 12; ++i) {
      CHECK(total_state_position(traj_p, i) == p.assets);
      CHECK(total_state_position(traj_cb, i) == p.assets);
    }
  }
}

TEST_CASE("alpha-stability is invariant under P<->CB transitions") {
  for (std::int64_t at = 1; at <= 9; ++at) {
    const Trajectory p_to_cb = simulate_with_transition(spec_of(SystemKind::P), 10,
                                                        {at, TransitionDirection::PtoCB});
    const Trajectory cb_to_p = simulate_with_transition(spec_of(SystemKind::CB), 10,
                                                        {at, TransitionDirection::CBtoP});
    const AlphaStability a1 = alpha_stability(p_to_cb);
    const AlphaStability a2 = alpha_stability(cb_to_p);
    CHECK(a1.stable);
    CHECK(a1.alpha == 1);
    CHECK(a2.stable);
    CHECK(a2.alpha == 1);
  }
}

TEST_CASE("alpha scales linearly in gamma") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (SystemKind kind : {SystemKind::P, SystemKind::CB, SystemKind::C}) {
    for (int trial = 0; trial < 8; ++trial) {
      const Rational gamma(num(rng), den(rng));
      const AlphaStability unit = alpha_stability(simulate(spec_of(kind, 1), 6));
      const AlphaStability scaled = alpha_stability(simulate(spec_of(kind, gamma), 6));
      CHECK(scaled.stable);
      CHECK(scaled.alpha == gamma * unit.alpha);
    }
  }
}

TEST_CASE("nonzero debt rate is rejected") {
  const Trajectory traj =
      simulate(SystemSpec(SystemKind::CB, kDemo, 1, 10, Rational(1, 20)), 5);
  CHECK_THROWS_AS(holdings_trace(traj), std::invalid_argument);
  CHECK_THROWS_AS(total_state_position(traj, 2), std::invalid_argument);
}
