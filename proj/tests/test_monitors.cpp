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

#include <doctest.h>

#include <cmath>

#include "qca/monitors.hpp"
#include "qca/stats.hpp"

using qca::ChannelModel;
using qca::MonitorConfig;
using qca::MonitorVerdict;
using qca::Scenario;

namespace {

/// Channel with enough signal for the coincidence statistic to have teeth.
Scenario monitor_scenario(uint64_t seed, int64_t n, bool eve) {
  Scenario s;
  s.w = 0.6;
  s.channel = ChannelModel{0.5, 0.5, 1e-4, n};
  s.bob_mu = 0.5;
  s.intrinsic_error = 0.03;
  s.eve_present = eve;
  s.seed = seed;
  if (eve) {
    const qca::BaselineStats baseline =
        qca::baseline_stats(s.channel, s.bob_mu, s.w, s.intrinsic_error);
    s.strategy = qca::solve_matching(s.w, 0.5, baseline, n);
  }
  return s;
}

std::vector<qca::ClickRecord> run_log(const Scenario& s) {
  qca::SimulateOptions opts;
  opts.collect_log = true;
  return qca::simulate(s, opts).log;
}

double expected_rate(const Scenario& s) {
  const qca::BaselineStats baseline =
      qca::baseline_stats(s.channel, s.bob_mu, s.w, s.intrinsic_error);
  return baseline.gain_GB / static_cast<double>(s.channel.pulse_count_N);
}

}  // namespace

TEST_CASE("z_from_significance: inverse of the two-sided tail") {
  CHECK(qca::z_from_significance(1.0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(qca::z_from_significance(qca::significance_from_z(4.0)) ==
        doctest::Approx(4.0).epsilon(1e-9));
  CHECK(qca::z_from_significance(qca::significance_from_z(2.5)) ==
        doctest::Approx(2.5).epsilon(1e-9));
  CHECK_THROWS_AS(qca::z_from_significance(0.0), qca::OutOfRangeError);
  CHECK_THROWS_AS(qca::z_from_significance(1.5), qca::OutOfRangeError);
}

TEST_CASE("MonitorConfig: validation and default threshold") {
  MonitorConfig config;
  config.validate();
  CHECK(qca::z_from_significance(config.determinism_threshold) ==
        doctest::Approx(4.0).epsilon(1e-6));

  config.window_size = 50;
  CHECK_THROWS_AS(config.validate(), qca::OutOfRangeError);
  config = MonitorConfig{};
  config.determinism_threshold = 0.0;
  CHECK_THROWS_AS(config.validate(), qca::OutOfRangeError);
  config = MonitorConfig{};
  config.coincidence_threshold = 1.2;
  CHECK_THROWS_AS(config.validate(), qca::OutOfRangeError);
}

TEST_CASE("monitors: honest traffic is unflagged") {
  int rate_flags = 0;
  int coincidence_flags = 0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const Scenario s = monitor_scenario(seed, 200000, false);
    const auto log = run_log(s);
    const MonitorConfig config;
    const MonitorVerdict rate =
        qca::click_statistics_monitor(log, config, expected_rate(s));
    const MonitorVerdict coincidence = qca::coincidence_monitor(log, config);
    if (rate.flagged) ++rate_flags;
    if (coincidence.flagged) ++coincidence_flags;
  }
  CHECK(rate_flags <= 1);
  CHECK(coincidence_flags <= 1);
}

TEST_CASE("monitors: matched attack passes the rate monitor, fails coincidence") {
  int rate_flags = 0;
  int coincidence_flags = 0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const Scenario s = monitor_scenario(seed, 200000, true);
    const auto log = run_log(s);
    const MonitorConfig config;
    const MonitorVerdict rate =
        qca::click_statistics_monitor(log, config, expected_rate(s));
    const MonitorVerdict coincidence = qca::coincidence_monitor(log, config);
    if (rate.flagged) ++rate_flags;
    if (coincidence.flagged) ++coincidence_flags;
  }
  // Rate matching defeats rate-only monitoring; coincidences give it away.
  CHECK(rate_flags <= 1);
  CHECK(coincidence_flags >= 9);
}

TEST_CASE("monitors: unthrottled attack on a lossy channel trips the rate monitor") {
  Scenario s = monitor_scenario(5, 200000, true);
  s.strategy.resend_throttle_xi = 1.0;
  const auto log = run_log(s);
  const MonitorVerdict rate =
      qca::click_statistics_monitor(log, MonitorConfig{}, expected_rate(s));
  CHECK(rate.flagged);
  CHECK(rate.statistic > 50.0);
}

TEST_CASE("monitors: windowed analysis") {
  const Scenario s = monitor_scenario(3, 200000, false);
  const auto log = run_log(s);
  MonitorConfig config;
  config.window_size = 50000;
  const MonitorVerdict rate =
      qca::click_statistics_monitor(log, config, expected_rate(s));
  CHECK(rate.window_count == 4);
  CHECK_FALSE(rate.flagged);
  const MonitorVerdict coincidence = qca::coincidence_monitor(log, config);
  CHECK(coincidence.window_count == 4);
}

TEST_CASE("monitors: insufficient data") {
  const Scenario short_run = monitor_scenario(1, 120, false);
  const auto log = run_log(short_run);

  MonitorConfig config;
  config.window_size = 1000;
  CHECK_THROWS_AS(qca::click_statistics_monitor(log, config, 0.1),
                  qca::InsufficientDataError);
  CHECK_THROWS_AS(qca::coincidence_monitor(log, config), qca::InsufficientDataError);

  // A fully blocked channel has no detector activity at all.
  Scenario blocked = monitor_scenario(2, 1000, true);
  blocked.channel.dark_count_prob = 0.0;
  blocked.strategy.resend_throttle_xi = 0.0;
  blocked.strategy.flip_prob_zeta = 0.0;
  const auto dead_log = run_log(blocked);
  CHECK_THROWS_AS(qca::coincidence_monitor(dead_log, MonitorConfig{}),
                  qca::InsufficientDataError);
}

TEST_CASE("monitors: false-positive rate over 100 honest runs") {
  int rate_flags = 0;
  int coincidence_flags = 0;
  for (uint64_t seed = 100; seed < 200; ++seed) {
    const Scenario s = monitor_scenario(seed, 20000, false);
    const auto log = run_log(s);
    const MonitorConfig config;
    if (qca::click_statistics_monitor(log, config, expected_rate(s)).flagged) {
      ++rate_flags;
    }
    if (qca::coincidence_monitor(log, config).flagged) ++coincidence_flags;
  }
  // Two-sided z at 4 gives ~6e-5 per run; allow slack for Poisson skew in
  // the coincidence count.
  CHECK(rate_flags <= 2);
  CHECK(coincidence_flags <= 2);
}
