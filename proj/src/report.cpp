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

#include "qca/report.hpp"

#include <cmath>

namespace qca {

using nlohmann::json;

json outcome_probs_to_json(const OutcomeProbs<double>& probs) {
  return json{{"p_correct", probs.p_correct},
              {"p_error", probs.p_error},
              {"p_inconclusive", probs.p_inconclusive}};
}

OutcomeProbs<double> outcome_probs_from_json(const json& j) {
  OutcomeProbs<double> probs;
  probs.p_correct = j.at("p_correct").get<double>();
  probs.p_error = j.at("p_error").get<double>();
  probs.p_inconclusive = j.at("p_inconclusive").get<double>();
  return probs;
}

json baseline_to_json(const BaselineStats& baseline) {
  return json{{"gain_GB", baseline.gain_GB}, {"qber_EB", baseline.qber_EB}};
}

BaselineStats baseline_from_json(const json& j) {
  BaselineStats baseline;
  baseline.gain_GB = j.at("gain_GB").get<double>();
  baseline.qber_EB = j.at("qber_EB").get<double>();
  return baseline;
}

json simulation_report_to_json(const SimulationReport& report) {
  json j;
  j["pulse_count"] = report.pulse_count;
  j["eve_correct"] = report.eve_correct;
  j["eve_error"] = report.eve_error;
  j["eve_inconclusive"] = report.eve_inconclusive;
  j["eve_gain_GE"] = report.eve_gain_GE;
  j["resends"] = report.resends;
  j["blocked"] = report.blocked;
  j["faked_clicks"] = report.faked_clicks;
  j["dark_clicks"] = report.dark_clicks;
  j["bob_clicks"] = report.bob_clicks;
  j["bob_errors"] = report.bob_errors;
  j["double_clicks"] = report.double_clicks;
  j["observed_qber"] = report.observed_qber;
  j["eve_key_knowledge_fraction"] = report.eve_key_knowledge_fraction;
  j["feasibility"] = report.feasibility;
  j["expected_gain_GB"] = report.expected_gain_GB;
  j["expected_qber_EB"] = report.expected_qber_EB;
  return j;
}

SimulationReport simulation_report_from_json(const json& j) {
  SimulationReport report;
  report.pulse_count = j.at("pulse_count").get<int64_t>();
  report.eve_correct = j.at("eve_correct").get<int64_t>();
  report.eve_error = j.at("eve_error").get<int64_t>();
  report.eve_inconclusive = j.at("eve_inconclusive").get<int64_t>();
  report.eve_gain_GE = j.at("eve_gain_GE").get<int64_t>();
  report.resends = j.at("resends").get<int64_t>();
  report.blocked = j.at("blocked").get<int64_t>();
  report.faked_clicks = j.at("faked_clicks").get<int64_t>();
  report.dark_clicks = j.at("dark_clicks").get<int64_t>();
  report.bob_clicks = j.at("bob_clicks").get<int64_t>();
  report.bob_errors = j.at("bob_errors").get<int64_t>();
  report.double_clicks = j.at("double_clicks").get<int64_t>();
  report.observed_qber = j.at("observed_qber").get<double>();
  report.eve_key_knowledge_fraction = j.at("eve_key_knowledge_fraction").get<double>();
  report.feasibility = j.at("feasibility").get<bool>();
  report.expected_gain_GB = j.at("expected_gain_GB").get<double>();
  report.expected_qber_EB = j.at("expected_qber_EB").get<double>();
  return report;
}

json monitor_verdict_to_json(const MonitorVerdict& verdict) {
  return json{{"flagged", verdict.flagged},
              {"statistic", verdict.statistic},
              {"threshold", verdict.threshold},
              {"window_count", verdict.window_count}};
}

MonitorVerdict monitor_verdict_from_json(const json& j) {
  MonitorVerdict verdict;
  verdict.flagged = j.at("flagged").get<bool>();
  verdict.statistic = j.at("statistic").get<double>();
  verdict.threshold = j.at("threshold").get<double>();
  verdict.window_count = j.at("window_count").get<int64_t>();
  return verdict;
}

void check_report_finite(const json& j) {
  if (j.is_number_float() && !std::isfinite(j.get<double>())) {
    throw ValidationError("report contains a non-finite number");
  }
  if (j.is_object() || j.is_array()) {
    for (const auto& item : j) check_report_finite(item);
  }
}

}  // namespace qca
