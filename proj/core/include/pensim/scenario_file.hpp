// scenario_file.hpp — JSON scenario files.
//
// Rationals are encoded as strings ("p/q" or finite decimals) so values
// survive the round trip exactly; JSON integers are accepted, JSON floats
// are rejected.
#pragma once

#include "pensim/system.hpp"
#include "pensim/transitions.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace pensim {

class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScenarioFile {
  SystemSpec system;
  std::int64_t horizon = 1;
  std::optional<TransitionDirective> transition;
  std::optional<PolicyScenario> beta_scenario;
};

/// Parses and validates a scenario document. Throws ScenarioError with a
/// field-qualified message on any malformed or out-of-contract input.
ScenarioFile load_scenario(std::istream& input);
ScenarioFile load_scenario_file(const std::string& path);
ScenarioFile parse_scenario(const std::string& json_text);

}  // namespace pensim
