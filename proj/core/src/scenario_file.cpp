#include "pensim/scenario_file.hpp"

#include "pensim/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace pensim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw ScenarioError("scenario: " + field + ": " + why);
}

Rational get_rational(const json& obj, const std::string& field) {
  if (!obj.contains(field)) fail(field, "missing");
  const json& v = obj.at(field);
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
  // Floats are lossy and therefore rejected.
  fail(field, "must be a rational string (\"p/q\" or decimal) or an integer");
}

std::int64_t get_integer(const json& obj, const std::string& field) {
  if (!obj.contains(field)) fail(field, "missing");
  const json& v = obj.at(field);
  if (!v.is_number_integer()) fail(field, "must be an integer");
  return v.get<std::int64_t>();
}

SystemKind parse_kind(const std::string& text) {
  if (text == "P") return SystemKind::P;
  if (text == "C") return SystemKind::C;
  if (text == "CB") return SystemKind::CB;
  fail("system.kind", "expected \"P\", \"C\" or \"CB\"");
}

TransitionDirection parse_direction(const std::string& text) {
  if (text == "p2cb") return TransitionDirection::PtoCB;
  if (text == "cb2p") return TransitionDirection::CBtoP;
  fail("transition.direction", "expected \"p2cb\" or \"cb2p\"");
}

ScenarioFile from_json(const json& doc) {
  if (!doc.is_object()) throw ScenarioError("scenario: top level must be an object");
  if (!doc.contains("demography")) fail("demography", "missing");
  if (!doc.contains("system")) fail("system", "missing");

  const json& demo = doc.at("demography");
  const json& sys = doc.at("system");

  try {
    DemographyParams demography(get_rational(demo, "a0"), get_rational(demo, "g"));

    if (!sys.contains("kind") || !sys.at("kind").is_string())
      fail("system.kind", "missing or not a string");
    const SystemKind kind = parse_kind(sys.at("kind").get<std::string>());
    const Rational gamma = sys.contains("gamma") ? get_rational(sys, "gamma") : Rational(1);
    const Rational assets = sys.contains("A") ? get_rational(sys, "A") : Rational(0);
    const Rational r_debt = sys.contains("r_debt") ? get_rational(sys, "r_debt") : Rational(0);

    ScenarioFile scenario{SystemSpec(kind, demography, gamma, assets, r_debt),
                          get_integer(doc, "horizon")};
    if (scenario.horizon < 1) fail("horizon", "must be >= 1");

    if (doc.contains("transition")) {
      const json& t = doc.at("transition");
      if (!t.contains("direction") || !t.at("direction").is_string())
        fail("transition.direction", "missing or not a string");
      scenario.transition = TransitionDirective{
          get_integer(t, "at"), parse_direction(t.at("direction").get<std::string>())};
      if (scenario.transition->at < 1 || scenario.transition->at > scenario.horizon)
        fail("transition.at", "must lie in [1, horizon]");
    }

    if (doc.contains("beta_scenario")) {
      const json& b = doc.at("beta_scenario");
      scenario.beta_scenario = PolicyScenario(get_rational(b, "beta"), get_integer(b, "start"));
      if (scenario.beta_scenario->start > scenario.horizon)
        fail("beta_scenario.start", "must lie in [1, horizon]");
    }

    return scenario;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(std::string("scenario: ") + e.what());
  }
}

}  // namespace

ScenarioFile parse_scenario(const std::string& json_text) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) throw ScenarioError("scenario: malformed JSON");
  return from_json(doc);
}

ScenarioFile load_scenario(std::istream& input) {
  std::ostringstream buffer;
  buffer << input.rdbuf();
  return parse_scenario(buffer.str());
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("scenario: cannot open " + path);
  return load_scenario(in);
}

}  // namespace pensim
