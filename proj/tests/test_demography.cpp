#include "pensim/demography.hpp"

#include <doctest.h>

#include <random>

using namespace pensim;

TEST_CASE("cohort sizes follow the growth law") {
  const DemographyParams params(100, Rational(1, 10));
  CHECK(cohort_size(params, 0) == 100);
  CHECK(cohort_size(params, 1) == 110);
  CHECK(cohort_size(params, 2) == 121);
  CHECK(cohort_size(params, 3) == Rational(1331, 10));
}

TEST_CASE("zero growth keeps cohorts constant") {
  const DemographyParams params(100, 0);
  CHECK(cohort_size(params, 0) == 100);
  CHECK(cohort_size(params, 7) == 100);
  CHECK(cohort_size(params, 100) == 100);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DemographyParams(0, Rational(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(DemographyParams(-5, 0), std::invalid_argument);
  CHECK_THROWS_AS(DemographyParams(100, Rational(-1, 10)), std::invalid_argument);
  const DemographyParams ok(100, 0);  // g = 0 must be accepted
  CHECK_THROWS_AS(cohort_size(ok, -1), std::invalid_argument);
}

TEST_CASE("consecutive cohort ratio is exactly 1+g") {
  std::mt19937 rng(20240801);
  std::uniform_int_distribution<int> num(0, 40);
  std::uniform_int_distribution<int> den(1, 20);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational g(num(rng), den(rng));
    const DemographyParams params(Rational(1 + num(rng), den(rng)), g);
    for (std::int64_t i : {0, 1, 5, 17}) {
      CHECK(cohort_size(params, i + 1) / cohort_size(params, i) == 1 + g);
      if (g > 0) CHECK(cohort_size(params, i + 1) > cohort_size(params, i));
      if (g == 0) CHECK(cohort_size(params, i + 1) == cohort_size(params, i));
    }
  }
}
