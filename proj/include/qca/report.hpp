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

#ifndef QCA_REPORT_HPP
#define QCA_REPORT_HPP

#include <json.hpp>

#include "qca/attack.hpp"
#include "qca/monitors.hpp"
#include "qca/simulate.hpp"

namespace qca {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json outcome_probs_to_json(const OutcomeProbs<double>& probs);
OutcomeProbs<double> outcome_probs_from_json(const nlohmann::json& j);

nlohmann::json baseline_to_json(const BaselineStats& baseline);
BaselineStats baseline_from_json(const nlohmann::json& j);

nlohmann::json simulation_report_to_json(const SimulationReport& report);
SimulationReport simulation_report_from_json(const nlohmann::json& j);

nlohmann::json monitor_verdict_to_json(const MonitorVerdict& verdict);
MonitorVerdict monitor_verdict_from_json(const nlohmann::json& j);

/// Raises ValidationError if any numeric value anywhere in the document is
/// non-finite. Every emitted report passes through this.
void check_report_finite(const nlohmann::json& j);

}  // namespace qca

#endif  // QCA_REPORT_HPP
