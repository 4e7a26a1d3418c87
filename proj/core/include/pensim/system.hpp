// system.hpp — pension system specifications and policy scenarios.
#pragma once

#include "pensim/demography.hpp"
#include "pensim/rational.hpp"

#include <cstdint>
#include <string_view>

namespace pensim {

/// The three pension systems.
///  P  — pay-as-you-go: workers pay pensioners directly.
///  C  — capital-funded: each generation buys assets and later sells them.
///  CB — capital-funded plus a state bonus topping benefits up to P levels.
enum class SystemKind { P, C, CB };

std::string_view to_string(SystemKind kind);

/// Scale all contributions and benefits of generations start+1 onward by
/// beta (> 1), starting at time `start`. Scaling is generation-anchored:
/// a generation's contribution and benefit scale together, so generation
/// `start` still receives its unscaled benefit.
struct PolicyScenario {
  Rational beta;
  std::int64_t start;

  PolicyScenario(Rational beta_, std::int64_t start_);

  bool operator==(const PolicyScenario&) const = default;
};

/// Full specification of a simulatable system.
struct SystemSpec {
  SystemKind kind;
  Rational gamma;                 // benefit/contribution scale, > 0
  Rational initial_state_assets;  // may be negative (public debt)
  Rational debt_rate;             // interest charged on negative state assets, >= 0
  DemographyParams demography;

  SystemSpec(SystemKind kind_, DemographyParams demography_, Rational gamma_ = 1,
             Rational initial_state_assets_ = 0, Rational debt_rate_ = 0);

  bool operator==(const SystemSpec&) const = default;
};

}  // namespace pensim
