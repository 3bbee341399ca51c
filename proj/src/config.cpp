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

#include "qca/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "qca/povm.hpp"

namespace qca {

double MuSpec::resolve(double w) const {
  switch (kind) {
    case Kind::Usd:
      return special_mu(w, MeasurementKind::Usd);
    case Kind::Breidbart:
      return special_mu(w, MeasurementKind::MinError);
    default:
      return value;
  }
}

MuSpec MuSpec::parse(const std::string& token) {
  if (token == "usd") return MuSpec{Kind::Usd, 0.0};
  if (token == "breidbart") return MuSpec{Kind::Breidbart, 0.0};
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ValidationError("mu spec must be 'usd', 'breidbart', or a number, got '" +
                          token + "'");
  }
  return MuSpec{Kind::Numeric, value};
}

std::string MuSpec::describe() const {
  switch (kind) {
    case Kind::Usd:
      return "usd";
    case Kind::Breidbart:
      return "breidbart";
    default: {
      std::ostringstream os;
      os.precision(17);
      os << value;
      return os.str();
    }
  }
}

void ScenarioConfig::validate() const {
  if (!(w >= 0.0 && w < 1.0)) {
    std::ostringstream os;
    os << "config: w must lie in [0, 1), got " << w;
    throw OutOfRangeError(os.str());
  }
  channel.validate();
  detail::check_intrinsic_error(intrinsic_error);
  monitor.validate();

  const Tolerances tol;
  // Both POVMs must exist for this w before any computation starts.
  calibrate_delta(w, bob_mu.resolve(w), tol);
  if (eve_present) {
    calibrate_delta(w, eve_mu.resolve(w), tol);
  }

  StrategyParams probe;
  probe.resend_throttle_xi = xi.value_or(1.0);
  probe.flip_prob_zeta = zeta.value_or(0.0);
  probe.fake_click_prob = fake_click_prob;
  probe.validate();
}

Scenario ScenarioConfig::to_scenario() const {
  Scenario scenario;
  scenario.w = w;
  scenario.channel = channel;
  scenario.bob_mu = bob_mu.resolve(w);
  scenario.strategy.mu = eve_mu.resolve(w);
  scenario.strategy.resend_throttle_xi = xi.value_or(1.0);
  scenario.strategy.flip_prob_zeta = zeta.value_or(0.0);
  scenario.strategy.fake_click_prob = fake_click_prob;
  scenario.seed = seed;
  scenario.intrinsic_error = intrinsic_error;
  scenario.eve_present = eve_present;
  return scenario;
}

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const char* where) {
  if (!j.is_object()) {
    throw ValidationError(std::string("config: '") + where + "' must be an object");
  }
  for (const auto& item : j.items()) {
    if (!allowed.contains(item.key())) {
      throw ValidationError(std::string("config: unknown field '") + item.key() +
                            "' in " + where);
    }
  }
}

double get_number(const json& j, const char* field) {
  if (!j.is_number()) {
    throw ValidationError(std::string("config: '") + field + "' must be a number");
  }
  const double value = j.get<double>();
  if (!std::isfinite(value)) {
    throw ValidationError(std::string("config: '") + field + "' must be finite");
  }
  return value;
}

int64_t get_integer(const json& j, const char* field) {
  if (!j.is_number_integer()) {
    throw ValidationError(std::string("config: '") + field + "' must be an integer");
  }
  return j.get<int64_t>();
}

MuSpec get_mu(const json& j, const char* field) {
  if (j.is_string()) {
    return MuSpec::parse(j.get<std::string>());
  }
  return MuSpec{MuSpec::Kind::Numeric, get_number(j, field)};
}

}  // namespace

ScenarioConfig config_from_json(const json& j) {
  ScenarioConfig config;
  require_keys(j,
               {"w", "eve_mu", "bob_mu", "channel", "strategy", "intrinsic_error",
                "seed", "eve_present", "monitor"},
               "top level");

  if (j.contains("w")) config.w = get_number(j["w"], "w");
  if (j.contains("eve_mu")) config.eve_mu = get_mu(j["eve_mu"], "eve_mu");
  if (j.contains("bob_mu")) config.bob_mu = get_mu(j["bob_mu"], "bob_mu");

  if (j.contains("channel")) {
    const json& c = j["channel"];
    require_keys(c,
                 {"transmittance", "detector_efficiency", "dark_count_prob",
                  "pulse_count"},
                 "channel");
    if (c.contains("transmittance")) {
      config.channel.transmittance_T = get_number(c["transmittance"], "transmittance");
    }
    if (c.contains("detector_efficiency")) {
      config.channel.detector_efficiency_eta =
          get_number(c["detector_efficiency"], "detector_efficiency");
    }
    if (c.contains("dark_count_prob")) {
      config.channel.dark_count_prob = get_number(c["dark_count_prob"], "dark_count_prob");
    }
    if (c.contains("pulse_count")) {
      config.channel.pulse_count_N = get_integer(c["pulse_count"], "pulse_count");
    }
  }

  if (j.contains("strategy")) {
    const json& s = j["strategy"];
    require_keys(s, {"xi", "zeta", "fake_click_prob"}, "strategy");
    if (s.contains("xi")) config.xi = get_number(s["xi"], "xi");
    if (s.contains("zeta")) config.zeta = get_number(s["zeta"], "zeta");
    if (s.contains("fake_click_prob")) {
      config.fake_click_prob = get_number(s["fake_click_prob"], "fake_click_prob");
    }
  }

  if (j.contains("intrinsic_error")) {
    config.intrinsic_error = get_number(j["intrinsic_error"], "intrinsic_error");
  }
  if (j.contains("seed")) {
    const json& s = j["seed"];
    if (!s.is_number_unsigned() && !s.is_number_integer()) {
      throw ValidationError("config: 'seed' must be a non-negative integer");
    }
    if (s.is_number_integer() && !s.is_number_unsigned() && s.get<int64_t>() < 0) {
      throw ValidationError("config: 'seed' must be a non-negative integer");
    }
    config.seed = s.get<uint64_t>();
  }
  if (j.contains("eve_present")) {
    if (!j["eve_present"].is_boolean()) {
      throw ValidationError("config: 'eve_present' must be a boolean");
    }
    config.eve_present = j["eve_present"].get<bool>();
  }

  if (j.contains("monitor")) {
    const json& m = j["monitor"];
    require_keys(m, {"window_size", "determinism_threshold", "coincidence_threshold"},
                 "monitor");
    if (m.contains("window_size")) {
      config.monitor.window_size = get_integer(m["window_size"], "window_size");
    }
    if (m.contains("determinism_threshold")) {
      config.monitor.determinism_threshold =
          get_number(m["determinism_threshold"], "determinism_threshold");
    }
    if (m.contains("coincidence_threshold")) {
      config.monitor.coincidence_threshold =
          get_number(m["coincidence_threshold"], "coincidence_threshold");
    }
  }
  return config;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError("config file " + path + ": " + e.what());
  }
  return config_from_json(j);
}

nlohmann::json config_to_json(const ScenarioConfig& config) {
  json j;
  j["w"] = config.w;
  j["eve_mu"] = config.eve_mu.resolve(config.w);
  j["bob_mu"] = config.bob_mu.resolve(config.w);
  j["transmittance"] = config.channel.transmittance_T;
  j["detector_efficiency"] = config.channel.detector_efficiency_eta;
  j["dark_count_prob"] = config.channel.dark_count_prob;
  j["pulse_count"] = config.channel.pulse_count_N;
  j["intrinsic_error"] = config.intrinsic_error;
  j["seed"] = config.seed;
  j["eve_present"] = config.eve_present;
  j["fake_click_prob"] = config.fake_click_prob;
  return j;
}

}  // namespace qca
