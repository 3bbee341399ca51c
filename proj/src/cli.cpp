// Copyright 2026 The qca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qca/cli.hpp"

#include <algorithm>
#include <cstdio>

#include "qca/click_log.hpp"
#include "qca/kraus.hpp"
#include "qca/report.hpp"

namespace qca {

using nlohmann::json;

namespace {

/// 17 significant digits: enough to reproduce any double exactly.
std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void emit(const json& j, std::ostream& out) {
  check_report_finite(j);
  out << j.dump(2) << '\n';
}

}  // namespace

int run_probe(const ScenarioConfig& config, std::ostream& out) {
  config.validate();
  const Tolerances tol;
  const double mu = config.eve_mu.resolve(config.w);
  const double delta = calibrate_delta(config.w, mu, tol);
  const TwoStatePovm<double> povm = build_povm(config.w, mu, tol);
  const StatePair<double> pair = embed_states(config.w);

  const OutcomeProbs<double> closed = outcome_probs_closed_form(config.w, mu, tol);
  const OutcomeProbs<double> born_u = outcome_probs_born(povm, pair, StateLabel::U);
  const OutcomeProbs<double> born_v = outcome_probs_born(povm, pair, StateLabel::V);
  const double residual = std::max(
      {std::abs(closed.p_correct - born_u.p_correct),
       std::abs(closed.p_error - born_u.p_error),
       std::abs(closed.p_inconclusive - born_u.p_inconclusive),
       std::abs(closed.p_correct - born_v.p_correct),
       std::abs(closed.p_error - born_v.p_error),
       std::abs(closed.p_inconclusive - born_v.p_inconclusive)});

  const auto detection_eig =
      hermitian_eig((povm.a_u + povm.a_v).eval(), tol);

  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "probe";
  j["w"] = config.w;
  j["eve_mu"] = mu;
  j["delta"] = delta;
  j["lambda_max"] = detection_eig.values(0);
  j["constraint_margin"] = constraint_margin(config.w, mu);
  j["constraint_ok"] = true;
  j["closed_form"] = outcome_probs_to_json(closed);
  j["born"] = outcome_probs_to_json(born_u);
  j["born_residual"] = residual;
  emit(j, out);
  return kExitOk;
}

int run_sweep(const ScenarioConfig& config, int mu_steps, std::ostream& out) {
  config.validate();
  if (mu_steps < 2) {
    throw OutOfRangeError("sweep: need at least 2 mu steps");
  }
  const Tolerances tol;
  const double bob_mu = config.bob_mu.resolve(config.w);
  const BaselineStats baseline = baseline_stats(
      config.channel, bob_mu, config.w, config.intrinsic_error, tol);
  const std::vector<double> grid = default_mu_grid(config.w, mu_steps);
  const std::vector<SweepPoint> points =
      sweep_feasibility(config.w, grid, baseline, config.channel.pulse_count_N, tol);

  out << "mu,p_correct,p_error,p_inconclusive,ge_per_pulse,feasible,zeta\n";
  for (const SweepPoint& point : points) {
    out << format_double(point.mu) << ',';
    if (!point.valid) {
      out << "nan,nan,nan,nan,0,invalid\n";
      continue;
    }
    out << format_double(point.probs.p_correct) << ','
        << format_double(point.probs.p_error) << ','
        << format_double(point.probs.p_inconclusive) << ','
        << format_double(point.gain_GE /
                         static_cast<double>(config.channel.pulse_count_N))
        << ',' << (point.feasible ? 1 : 0) << ',';
    if (point.zeta.has_value()) {
      out << format_double(*point.zeta);
    } else {
      out << "infeasible";
    }
    out << '\n';
  }
  return kExitOk;
}

int run_simulate(const ScenarioConfig& config, int threads,
                 const std::optional<std::string>& log_path, std::ostream& out) {
  config.validate();
  const Tolerances tol;
  Scenario scenario = config.to_scenario();
  const BaselineStats baseline = baseline_stats(
      scenario.channel, scenario.bob_mu, scenario.w, scenario.intrinsic_error, tol);

  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "simulate";
  j["scenario"] = config_to_json(config);
  j["baseline"] = baseline_to_json(baseline);

  json matching;
  const bool needs_matching =
      scenario.eve_present && (!config.xi.has_value() || !config.zeta.has_value());
  matching["auto"] = needs_matching;
  if (needs_matching) {
    try {
      const StrategyParams matched = solve_matching(
          scenario.w, scenario.strategy.mu, baseline,
          scenario.channel.pulse_count_N, tol);
      if (!config.xi.has_value()) {
        scenario.strategy.resend_throttle_xi = matched.resend_throttle_xi;
      }
      if (!config.zeta.has_value()) {
        scenario.strategy.flip_prob_zeta = matched.flip_prob_zeta;
      }
    } catch (const InfeasibleError& e) {
      matching["infeasible"] =
          e.kind() == InfeasibleError::Kind::Rate ? "rate" : "error";
      matching["reason"] = e.what();
      j["matching"] = matching;
      SimulationReport empty;
      empty.pulse_count = scenario.channel.pulse_count_N;
      empty.feasibility = false;
      empty.expected_gain_GB = baseline.gain_GB;
      empty.expected_qber_EB = baseline.qber_EB;
      j["report"] = simulation_report_to_json(empty);
      emit(j, out);
      return kExitInfeasible;
    }
  }
  matching["xi"] = scenario.strategy.resend_throttle_xi;
  matching["zeta"] = scenario.strategy.flip_prob_zeta;
  j["matching"] = matching;

  SimulateOptions options;
  options.threads = threads;
  options.collect_log = log_path.has_value();
  const SimulationResult result = simulate(scenario, options);
  if (log_path.has_value()) {
    write_click_log_file(*log_path, result.log);
  }
  j["report"] = simulation_report_to_json(result.report);
  emit(j, out);
  return kExitOk;
}

int run_monitor(const ScenarioConfig& config, const std::string& log_path,
                std::ostream& out) {
  config.validate();
  const Tolerances tol;
  const std::vector<ClickRecord> log = read_click_log_file(log_path);
  const double bob_mu = config.bob_mu.resolve(config.w);
  const BaselineStats baseline = baseline_stats(
      config.channel, bob_mu, config.w, config.intrinsic_error, tol);
  const double expected_rate =
      baseline.gain_GB / static_cast<double>(config.channel.pulse_count_N);

  const MonitorVerdict rate_verdict =
      click_statistics_monitor(log, config.monitor, expected_rate);
  const MonitorVerdict coincidence_verdict = coincidence_monitor(log, config.monitor);

  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "monitor";
  j["pulses"] = log.size();
  j["expected_rate"] = expected_rate;
  j["click_statistics"] = monitor_verdict_to_json(rate_verdict);
  j["coincidence"] = monitor_verdict_to_json(coincidence_verdict);
  emit(j, out);
  return kExitOk;
}

}  // namespace qca
