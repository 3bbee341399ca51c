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

#ifndef QCA_CLI_HPP
#define QCA_CLI_HPP

#include <optional>
#include <ostream>
#include <string>

#include "qca/config.hpp"

namespace qca {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitIo = 4;

/// Closed-form and Born-rule probabilities, delta, and the top eigenvalue of
/// the detection operator for (w, eve_mu). JSON on `out`.
int run_probe(const ScenarioConfig& config, std::ostream& out);

/// CSV sweep over mu from the min-error to the unambiguous regime.
int run_sweep(const ScenarioConfig& config, int mu_steps, std::ostream& out);

/// Full Monte Carlo run. Applies rate/error matching unless xi and zeta were
/// configured explicitly; emits the JSON report (and the click log when
/// `log_path` is set). Returns kExitInfeasible when matching fails; the
/// report is still emitted with feasibility=false.
int run_simulate(const ScenarioConfig& config, int threads,
                 const std::optional<std::string>& log_path, std::ostream& out);

/// Runs both detector-side monitors over a click log. JSON on `out`.
int run_monitor(const ScenarioConfig& config, const std::string& log_path,
                std::ostream& out);

}  // namespace qca

#endif  // QCA_CLI_HPP
