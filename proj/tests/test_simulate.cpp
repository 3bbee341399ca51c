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

#include "qca/simulate.hpp"

using qca::ChannelModel;
using qca::Scenario;
using qca::SimulateOptions;
using qca::SimulationReport;

namespace {

/// The matched lossy scenario used throughout: w=0.6, mu=0.5 on both sides.
Scenario matched_scenario(uint64_t seed, int64_t n) {
  Scenario s;
  s.w = 0.6;
  s.channel = ChannelModel{0.1, 0.2, 1e-5, n};
  s.bob_mu = 0.5;
  s.intrinsic_error = 0.01;
  s.seed = seed;
  const qca::BaselineStats baseline =
      qca::baseline_stats(s.channel, s.bob_mu, s.w, s.intrinsic_error);
  s.strategy = qca::solve_matching(s.w, 0.5, baseline, n);
  return s;
}

bool reports_equal(const SimulationReport& a, const SimulationReport& b) {
  return a.pulse_count == b.pulse_count && a.eve_correct == b.eve_correct &&
         a.eve_error == b.eve_error && a.eve_inconclusive == b.eve_inconclusive &&
         a.resends == b.resends && a.blocked == b.blocked &&
         a.faked_clicks == b.faked_clicks && a.dark_clicks == b.dark_clicks &&
         a.bob_clicks == b.bob_clicks && a.bob_errors == b.bob_errors &&
         a.double_clicks == b.double_clicks &&
         a.observed_qber == b.observed_qber &&
         a.eve_key_knowledge_fraction == b.eve_key_knowledge_fraction;
}

}  // namespace

TEST_CASE("simulate: blocking everything leaves Bob dark") {
  Scenario s;
  s.w = 0.6;
  s.channel = ChannelModel{0.5, 0.5, 0.0, 20000};
  s.bob_mu = 0.5;
  s.strategy.mu = 0.5;
  s.strategy.resend_throttle_xi = 0.0;
  s.seed = 7;
  const auto result = qca::simulate(s);
  CHECK(result.report.bob_clicks == 0);
  CHECK(result.report.resends == 0);
  CHECK(result.report.blocked == s.channel.pulse_count_N);
}

TEST_CASE("simulate: conservation invariants") {
  const Scenario s = matched_scenario(11, 200000);
  const auto result = qca::simulate(s);
  const SimulationReport& r = result.report;
  CHECK(r.eve_correct + r.eve_error + r.eve_inconclusive == r.pulse_count);
  CHECK(r.resends + r.blocked == r.pulse_count);
  CHECK(r.eve_gain_GE == r.eve_correct + r.eve_error);
  CHECK(r.bob_clicks == r.faked_clicks + r.dark_clicks);
  CHECK(r.resends <= r.eve_gain_GE);
  CHECK(r.feasibility);
}

TEST_CASE("simulate: full throttle resends every conclusive outcome") {
  Scenario s;
  s.w = 0.6;
  s.channel = ChannelModel{0.5, 0.5, 0.0, 50000};
  s.bob_mu = 0.5;
  s.strategy.mu = 0.5;
  s.strategy.resend_throttle_xi = 1.0;
  s.seed = 13;
  const auto result = qca::simulate(s);
  CHECK(result.report.resends == result.report.eve_gain_GE);
  CHECK(result.report.blocked == result.report.eve_inconclusive);
  CHECK(result.report.faked_clicks == result.report.resends);
}

TEST_CASE("simulate: identical seeds give identical runs, thread count is irrelevant") {
  const Scenario s = matched_scenario(42, 300000);

  SimulateOptions opts;
  opts.collect_log = true;
  const auto first = qca::simulate(s, opts);
  const auto second = qca::simulate(s, opts);
  CHECK(reports_equal(first.report, second.report));
  CHECK(first.log == second.log);

  SimulateOptions threaded;
  threaded.collect_log = true;
  threaded.threads = 4;
  const auto parallel = qca::simulate(s, threaded);
  CHECK(reports_equal(first.report, parallel.report));
  CHECK(first.log == parallel.log);

  Scenario other = s;
  other.seed = 43;
  const auto different = qca::simulate(other, opts);
  CHECK_FALSE(reports_equal(first.report, different.report));
}

TEST_CASE("simulate: matched attack reproduces Bob's expected statistics") {
  const int64_t n = 1000000;
  const Scenario s = matched_scenario(3, n);
  const qca::BaselineStats baseline =
      qca::baseline_stats(s.channel, s.bob_mu, s.w, s.intrinsic_error);

  const auto result = qca::simulate(s);
  const SimulationReport& r = result.report;

  const double p_click = baseline.gain_GB / static_cast<double>(n);
  const double sigma_clicks = std::sqrt(n * p_click * (1.0 - p_click));
  CHECK(std::abs(r.bob_clicks - baseline.gain_GB) <= 3.0 * sigma_clicks);

  const double expected_errors = baseline.qber_EB * baseline.gain_GB;
  const double sigma_errors =
      std::sqrt(baseline.gain_GB * baseline.qber_EB * (1.0 - baseline.qber_EB));
  CHECK(std::abs(r.bob_errors - expected_errors) <= 3.0 * sigma_errors);
  CHECK(std::abs(r.observed_qber - baseline.qber_EB) <= 0.01);
}

TEST_CASE("simulate: saturated blinding with no dark counts hands Eve every bit") {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    Scenario s = matched_scenario(seed, 100000);
    s.channel.dark_count_prob = 0.0;
    s.strategy.fake_click_prob = 1.0;
    const auto result = qca::simulate(s);
    CHECK(result.report.bob_clicks > 0);
    CHECK(result.report.eve_key_knowledge_fraction == 1.0);
    CHECK(result.report.dark_clicks == 0);
  }
}

TEST_CASE("simulate: empirical outcome frequencies converge to the Born probabilities") {
  const auto probs = qca::outcome_probs_closed_form(0.6, 0.5);
  for (const int64_t n : {int64_t(10000), int64_t(1000000)}) {
    Scenario s;
    s.w = 0.6;
    s.channel = ChannelModel{0.5, 0.5, 0.0, n};
    s.bob_mu = 0.5;
    s.strategy.mu = 0.5;
    s.seed = 17;
    const auto result = qca::simulate(s);
    const SimulationReport& r = result.report;
    const auto check_freq = [&](int64_t count, double p) {
      const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
      CHECK(std::abs(static_cast<double>(count) / static_cast<double>(n) - p) <=
            4.0 * sigma);
    };
    check_freq(r.eve_correct, probs.p_correct);
    check_freq(r.eve_error, probs.p_error);
    check_freq(r.eve_inconclusive, probs.p_inconclusive);
  }
}

TEST_CASE("simulate: honest run statistics and log shape") {
  Scenario s;
  s.w = 0.6;
  s.channel = ChannelModel{0.5, 0.5, 1e-4, 200000};
  s.bob_mu = 0.5;
  s.intrinsic_error = 0.03;
  s.eve_present = false;
  s.seed = 23;

  SimulateOptions opts;
  opts.collect_log = true;
  const auto result = qca::simulate(s, opts);
  const SimulationReport& r = result.report;

  CHECK(r.eve_correct == 0);
  CHECK(r.eve_error == 0);
  CHECK(r.eve_inconclusive == 0);
  CHECK(r.resends == 0);
  CHECK(r.faked_clicks == 0);
  CHECK(r.feasibility);

  const qca::BaselineStats baseline =
      qca::baseline_stats(s.channel, s.bob_mu, s.w, s.intrinsic_error);
  const double p_click = baseline.gain_GB / 200000.0;
  const double sigma = std::sqrt(200000.0 * p_click * (1.0 - p_click));
  CHECK(std::abs(r.bob_clicks - baseline.gain_GB) <= 4.0 * sigma);
  CHECK(std::abs(r.observed_qber - baseline.qber_EB) <= 0.01);

  REQUIRE(result.log.size() == 200000);
  int64_t clicks = 0;
  for (size_t i = 0; i < result.log.size(); ++i) {
    const qca::ClickRecord& rec = result.log[i];
    CHECK(rec.pulse_index == static_cast<int64_t>(i));
    CHECK(rec.action == qca::PulseActionCode::Honest);
    CHECK(rec.eve_outcome == qca::EveOutcomeCode::None);
    if (rec.bob_click) {
      ++clicks;
      CHECK(rec.bob_bit >= 0);
      CHECK((rec.detector_a_click || rec.detector_b_click));
    } else {
      CHECK(rec.bob_bit == -1);
    }
    if (i > 200) break;  // spot-check the head; counting continues below
  }
  clicks = 0;
  for (const auto& rec : result.log) {
    if (rec.bob_click) ++clicks;
  }
  CHECK(clicks == r.bob_clicks);
}

TEST_CASE("simulate: log is consistent with the attack-mode tallies") {
  Scenario s = matched_scenario(29, 100000);
  SimulateOptions opts;
  opts.collect_log = true;
  const auto result = qca::simulate(s, opts);

  int64_t resends = 0;
  int64_t clicks = 0;
  int64_t errors = 0;
  for (const auto& rec : result.log) {
    if (rec.action == qca::PulseActionCode::Resend) ++resends;
    if (rec.bob_click) {
      ++clicks;
      if (rec.bob_bit != static_cast<int8_t>(rec.alice_bit)) ++errors;
    }
    // Inconclusive outcomes never resend.
    if (rec.eve_outcome == qca::EveOutcomeCode::Inconclusive) {
      CHECK(rec.action == qca::PulseActionCode::Block);
    }
  }
  CHECK(resends == result.report.resends);
  CHECK(clicks == result.report.bob_clicks);
  CHECK(errors == result.report.bob_errors);
}

TEST_CASE("simulate: scenario validation happens before running") {
  Scenario s = matched_scenario(1, 1000);
  s.strategy.resend_throttle_xi = 2.0;
  CHECK_THROWS_AS(qca::simulate(s), qca::OutOfRangeError);
  s = matched_scenario(1, 1000);
  s.channel.transmittance_T = 0.0;
  CHECK_THROWS_AS(qca::simulate(s), qca::OutOfRangeError);
}
