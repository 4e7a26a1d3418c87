#include "pensim/render.hpp"

#include "pensim/demography.hpp"

#include <sstream>
#include <stdexcept>

namespace pensim {

std::string format_number(const Rational& value, NumberStyle style) {
  return style == NumberStyle::Exact ? to_fraction_string(value) : to_decimal_string(value);
}

std::string ledger_csv(const Trajectory& traj, NumberStyle style) {
  const IndexShareLedger shares = holdings_trace(traj);
  std::ostringstream out;
  out << "i,contribution,benefit,bonus,worker_assets_after,state_assets_after,"
         "shares_participants,shares_state\n";
  for (const StepRecord& rec : traj.records()) {
    const ShareHoldings& h = shares.holdings[static_cast<std::size_t>(rec.step)];
    out << rec.step << ',' << format_number(rec.contribution, style) << ','
        << format_number(rec.benefit, style) << ',' << format_number(rec.bonus, style) << ','
        << format_number(rec.worker_assets_after, style) << ','
        << format_number(rec.state_assets_after, style) << ','
        << format_number(h.participants, style) << ',' << format_number(h.state, style)
        << '\n';
  }
  return out.str();
}

std::vector<std::vector<Rational>> parse_ledger_csv(const std::string& csv) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("ledger csv: empty input");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Rational> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) row.push_back(parse_rational(field));
    if (row.size() != 8) throw std::invalid_argument("ledger csv: expected 8 columns");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ledger_markdown(const Trajectory& traj) {
  const IndexShareLedger shares = holdings_trace(traj);
  std::ostringstream out;
  out << "| i | contribution | benefit | bonus | worker assets | state assets |"
         " shares (participants) | shares (state) |\n"
      << "|---|---|---|---|---|---|---|---|\n";
  for (const StepRecord& rec : traj.records()) {
    const ShareHoldings& h = shares.holdings[static_cast<std::size_t>(rec.step)];
    out << "| " << rec.step << " | " << to_decimal_string(rec.contribution) << " | "
        << to_decimal_string(rec.benefit) << " | " << to_decimal_string(rec.bonus) << " | "
        << to_decimal_string(rec.worker_assets_after) << " | "
        << to_decimal_string(rec.state_assets_after) << " | "
        << to_decimal_string(h.participants) << " | " << to_decimal_string(h.state) << " |\n";
  }
  return out.str();
}

namespace {

std::string gamma_prefix(const Rational& gamma) {
  if (gamma == 1) return "";
  return to_decimal_string(gamma) + "*";
}

}  // namespace

std::string comparison_table(int which, const DemographyParams& demography,
                             const Rational& initial_state_assets, const Rational& gamma,
                             std::int64_t horizon) {
  const SystemSpec payg(SystemKind::P, demography, gamma, initial_state_assets);
  const SystemSpec funded(SystemKind::C, demography, gamma, initial_state_assets);
  const SystemSpec funded_bonus(SystemKind::CB, demography, gamma, initial_state_assets);
  const Trajectory p = simulate(payg, horizon);
  const Trajectory c = simulate(funded, horizon);
  const Trajectory cb = simulate(funded_bonus, horizon);

  const std::string gp = gamma_prefix(gamma);
  std::ostringstream out;

  if (which == 1) {
    out << "| | System P | System C | System CB |\n|---|---|---|---|\n"
        << "| Contribution of generation i > 0 | " << gp << "a_i | " << gp << "a_i | " << gp
        << "a_i |\n"
        << "| Benefit of generation i > 0 | " << gp << "a_{i+1} | " << gp << "a_i | " << gp
        << "a_{i+1} |\n"
        << "| State assets after time step i | A | A | A - " << gp << "a_{i+1} |\n";
    for (std::int64_t i = 0; i <= horizon; ++i) {
      out << "| Contribution at time i=" << i << " | " << to_decimal_string(p.contribution_at(i))
          << " | " << to_decimal_string(c.contribution_at(i)) << " | "
          << to_decimal_string(cb.contribution_at(i)) << " |\n"
          << "| Benefit at time i=" << i << " | " << to_decimal_string(p.benefit_at(i)) << " | "
          << to_decimal_string(c.benefit_at(i)) << " | " << to_decimal_string(cb.benefit_at(i))
          << " |\n"
          << "| State assets after time step i=" << i << " | "
          << to_decimal_string(p.state_assets_after(i)) << " | "
          << to_decimal_string(c.state_assets_after(i)) << " | "
          << to_decimal_string(cb.state_assets_after(i)) << " |\n";
    }
    return out.str();
  }

  if (which == 2) {
    out << "| | System P | System CB |\n|---|---|---|\n"
        << "| Worker assets after step i | 0 | " << gp << "a_{i+1} |\n"
        << "| State assets after step i | A | A - " << gp << "a_{i+1} |\n";
    for (std::int64_t i = 0; i <= horizon; ++i) {
      out << "| Worker assets after step i=" << i << " | "
          << to_decimal_string(p.worker_assets_after(i)) << " | "
          << to_decimal_string(cb.worker_assets_after(i)) << " |\n"
          << "| State assets after step i=" << i << " | "
          << to_decimal_string(p.state_assets_after(i)) << " | "
          << to_decimal_string(cb.state_assets_after(i)) << " |\n"
          << "| Total assets after step i=" << i << " | "
          << to_decimal_string(p.worker_assets_after(i) + p.state_assets_after(i)) << " | "
          << to_decimal_string(cb.worker_assets_after(i) + cb.state_assets_after(i)) << " |\n";
    }
    return out.str();
  }

  if (which == 3) {
    const std::string g = to_decimal_string(gamma);
    out << "| | P_gamma | CB_gamma |\n|---|---|---|\n"
        << "| gamma | " << g << " | " << g << " |\n"
        << "| Contribution of generation i > 0 | gamma*a_i | gamma*a_i |\n"
        << "| Benefit of generation i | gamma*a_{i+1} | gamma*a_{i+1} |\n"
        << "| State assets after time step i | A | A - gamma*a_{i+1} |\n";
    for (std::int64_t i = 0; i <= horizon; ++i) {
      out << "| Contribution at time i=" << i << " | " << to_decimal_string(p.contribution_at(i))
          << " | " << to_decimal_string(cb.contribution_at(i)) << " |\n"
          << "| Benefit at time i=" << i << " | " << to_decimal_string(p.benefit_at(i)) << " | "
          << to_decimal_string(cb.benefit_at(i)) << " |\n"
          << "| State assets after time step i=" << i << " | "
          << to_decimal_string(p.state_assets_after(i)) << " | "
          << to_decimal_string(cb.state_assets_after(i)) << " |\n";
    }
    return out.str();
  }

  throw std::invalid_argument("comparison_table: which must be 1, 2 or 3");
}

std::string equivalence_report_text(const EquivalenceReport& report) {
  std::ostringstream out;
  out << "| transition time | direction | flows | status | result |\n|---|---|---|---|---|\n";
  for (const EquivalenceCheck& c : report.checks) {
    out << "| " << c.at << " | " << to_string(c.direction) << " | "
        << (c.flows_match ? "match" : "MISMATCH") << " | "
        << (c.status_matches ? "match" : "MISMATCH") << " | "
        << (c.passed() ? "PASS" : "FAIL") << " |\n";
  }
  out << report.passed_count() << "/" << report.total_count() << " checks passed\n";
  return out.str();
}

std::string metric_report_text(const InconsistencyReport& report) {
  std::ostringstream out;
  out << "| metric | verdict | delta at last step |\n|---|---|---|\n";
  for (const MetricReport& m : report.metrics) {
    out << "| " << m.name << " | " << to_string(m.verdict) << " | "
        << (m.values.empty() ? std::string("-") : to_decimal_string(m.values.back()))
        << " |\n";
  }
  out << "flows identical: " << (report.flows_identical ? "TRUE" : "FALSE") << "\n";
  return out.str();
}

}  // namespace pensim
