#include "pensim/demography.hpp"

#include <stdexcept>
#include <utility>

namespace pensim {

DemographyParams::DemographyParams(Rational a0_, Rational g_)
    : a0(std::move(a0_)), g(std::move(g_)) {
  if (a0 <= 0) throw std::invalid_argument("demography: a0 must be positive");
  if (g < 0) throw std::invalid_argument("demography: g must be non-negative");
}

Rational cohort_size(const DemographyParams& params, std::int64_t i) {
  if (i < 0) throw std::invalid_argument("cohort_size: generation index must be >= 0");
  const Rational growth = 1 + params.g;
  const auto e = static_cast<unsigned>(i);
  return params.a0 * Rational(pow(numerator(growth), e), pow(denominator(growth), e));
}

}  // namespace pensim
