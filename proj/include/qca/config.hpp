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

#ifndef QCA_CONFIG_HPP
#define QCA_CONFIG_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "qca/monitors.hpp"
#include "qca/simulate.hpp"

namespace qca {

/// A measurement regime given either numerically or by name.
struct MuSpec {
  enum class Kind { Numeric, Usd, Breidbart };
  Kind kind = Kind::Numeric;
  double value = 0.0;

  double resolve(double w) const;

  /// Accepts "usd", "breidbart", or a decimal literal.
  static MuSpec parse(const std::string& token);

  std::string describe() const;
};

/// Full scenario description as accepted from JSON config files and CLI
/// flags. Flags win over file values; validation happens before any
/// computation and unknown JSON fields are rejected.
struct ScenarioConfig {
  double w = 0.6;
  MuSpec eve_mu{MuSpec::Kind::Numeric, 0.5};
  MuSpec bob_mu{MuSpec::Kind::Numeric, 0.5};
  ChannelModel channel{0.1, 0.2, 1e-5, 100000};
  std::optional<double> xi;    // absent = derive via rate matching
  std::optional<double> zeta;  // absent = derive via error matching
  double fake_click_prob = 1.0;
  double intrinsic_error = 0.01;
  uint64_t seed = 1;
  bool eve_present = true;
  MonitorConfig monitor;

  void validate() const;

  /// Scenario with both mu values resolved; xi/zeta default to 1/0 here and
  /// are overwritten by the matching solver unless explicitly configured.
  Scenario to_scenario() const;
};

/// Strict parse: every unknown key, wrong type, or out-of-range value
/// raises ValidationError.
ScenarioConfig config_from_json(const nlohmann::json& j);

/// Reads and parses a config file; I/O and JSON syntax problems raise
/// IoError, semantic problems ValidationError.
ScenarioConfig load_config_file(const std::string& path);

/// Scenario echo used in reports.
nlohmann::json config_to_json(const ScenarioConfig& config);

}  // namespace qca

#endif  // QCA_CONFIG_HPP
