// demography.hpp — cohort sizes under constant population growth.
#pragma once

#include "pensim/rational.hpp"

#include <cstdint>

namespace pensim {

/// Population parameters: generation i has size a0 * (1+g)^i.
struct DemographyParams {
  Rational a0;  // initial cohort size, > 0
  Rational g;   // per-period growth rate, >= 0

  DemographyParams(Rational a0_, Rational g_);

  bool operator==(const DemographyParams&) const = default;
};

/// Size of generation i, exactly a0 * (1+g)^i.
Rational cohort_size(const DemographyParams& params, std::int64_t i);

}  // namespace pensim
