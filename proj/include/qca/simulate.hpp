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

#ifndef QCA_SIMULATE_HPP
#define QCA_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "qca/attack.hpp"
#include "qca/feed_forward.hpp"

namespace qca {

/// Everything one simulation run needs. `strategy.mu` is Eve's measurement
/// regime; `bob_mu` parameterizes Bob's (honest) receiver POVM.
struct Scenario {
  double w = 0.6;
  ChannelModel channel;
  double bob_mu = 0.5;
  StrategyParams strategy;
  uint64_t seed = 1;
  double intrinsic_error = 0.01;
  bool eve_present = true;
};

/// What Eve saw for one pulse (None in honest runs).
enum class EveOutcomeCode : uint8_t { Correct = 0, Error = 1, Inconclusive = 2, None = 3 };

/// What happened to the channel slot.
enum class PulseActionCode : uint8_t { Resend = 0, Block = 1, Honest = 2 };

/// One row of the per-pulse click log.
struct ClickRecord {
  int64_t pulse_index = 0;
  uint8_t alice_bit = 0;  // 0 = u, 1 = v
  EveOutcomeCode eve_outcome = EveOutcomeCode::None;
  PulseActionCode action = PulseActionCode::Honest;
  bool bob_click = false;
  int8_t bob_bit = -1;  // -1 = no click registered
  bool detector_a_click = false;
  bool detector_b_click = false;

  bool operator==(const ClickRecord&) const = default;
};

/// Tallies and derived statistics of one run.
struct SimulationReport {
  int64_t pulse_count = 0;

  // Eve's measurement outcomes (zero in honest runs).
  int64_t eve_correct = 0;
  int64_t eve_error = 0;
  int64_t eve_inconclusive = 0;
  int64_t eve_gain_GE = 0;  // conclusive outcomes = correct + error

  // Channel actions.
  int64_t resends = 0;
  int64_t blocked = 0;

  // Bob's side.
  int64_t faked_clicks = 0;
  int64_t dark_clicks = 0;
  int64_t bob_clicks = 0;
  int64_t bob_errors = 0;
  int64_t double_clicks = 0;

  double observed_qber = 0.0;
  /// Fraction of Bob's registered bits that originate from a label Eve
  /// chose (faked clicks over all clicks); dark clicks are the unknown rest.
  double eve_key_knowledge_fraction = 0.0;

  bool feasibility = true;
  double expected_gain_GB = 0.0;
  double expected_qber_EB = 0.0;
};

struct SimulateOptions {
  /// Worker threads; 0 = hardware concurrency. The result is identical for
  /// every thread count: pulses are split into fixed 65536-pulse shards,
  /// shard k draws from RandomStream::for_shard(seed, k), and tallies are
  /// merged in shard order.
  int threads = 1;
  bool collect_log = false;
};

struct SimulationResult {
  SimulationReport report;
  std::vector<ClickRecord> log;  // empty unless collect_log was set
};

/// Runs the full per-pulse model. With Eve present: Alice picks u/v
/// uniformly, Eve samples a POVM outcome, feed-forward blocks or resends,
/// faked states trigger Bob deterministically (probability fake_click_prob)
/// and dark counts fire only on slots without a faked click. Without Eve:
/// Bob's two detectors are independently thinned signal + dark processes.
SimulationResult simulate(const Scenario& scenario,
                          const SimulateOptions& options = SimulateOptions{});

}  // namespace qca

#endif  // QCA_SIMULATE_HPP
