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

#include "qca/simulate.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "qca/rng.hpp"

namespace qca {
namespace {

constexpr int64_t kShardSize = 65536;

struct Tally {
  int64_t eve_correct = 0;
  int64_t eve_error = 0;
  int64_t eve_inconclusive = 0;
  int64_t resends = 0;
  int64_t blocked = 0;
  int64_t faked_clicks = 0;
  int64_t dark_clicks = 0;
  int64_t bob_clicks = 0;
  int64_t bob_errors = 0;
  int64_t double_clicks = 0;

  Tally& operator+=(const Tally& o) {
    eve_correct += o.eve_correct;
    eve_error += o.eve_error;
    eve_inconclusive += o.eve_inconclusive;
    resends += o.resends;
    blocked += o.blocked;
    faked_clicks += o.faked_clicks;
    dark_clicks += o.dark_clicks;
    bob_clicks += o.bob_clicks;
    bob_errors += o.bob_errors;
    double_clicks += o.double_clicks;
    return *this;
  }
};

/// Per-pulse probabilities precomputed once per run.
struct PulseModel {
  // Eve's outcome thresholds (attack mode).
  double p_correct = 0.0;
  double p_conclusive = 0.0;
  // Honest signal rates per detector, conditional on the sent state.
  double p_sig_match = 0.0;  // detector matching the sent state
  double p_sig_other = 0.0;
  // Per-detector dark probability d with 1 - (1-d)^2 = per-gate probability.
  double dark_per_detector = 0.0;
};

PulseModel make_model(const Scenario& s, const Tolerances& tol) {
  PulseModel model;
  model.dark_per_detector = 1.0 - std::sqrt(1.0 - s.channel.dark_count_prob);
  if (s.eve_present) {
    const OutcomeProbs<double> probs =
        outcome_probs_closed_form(s.w, s.strategy.mu, tol);
    model.p_correct = probs.p_correct;
    model.p_conclusive = probs.p_correct + probs.p_error;
  } else {
    const OutcomeProbs<double> probs = outcome_probs_closed_form(s.w, s.bob_mu, tol);
    const double te = s.channel.transmittance_T * s.channel.detector_efficiency_eta;
    const double i = s.intrinsic_error;
    model.p_sig_match = te * (probs.p_correct * (1.0 - i) + probs.p_error * i);
    model.p_sig_other = te * (probs.p_error * (1.0 - i) + probs.p_correct * i);
  }
  return model;
}

void run_shard(const Scenario& s, const PulseModel& model, int64_t begin,
               int64_t end, uint64_t shard_index, bool collect_log, Tally& tally,
               std::vector<ClickRecord>& log) {
  RandomStream rng = RandomStream::for_shard(s.seed, shard_index);
  if (collect_log) log.reserve(static_cast<size_t>(end - begin));

  for (int64_t i = begin; i < end; ++i) {
    ClickRecord rec;
    rec.pulse_index = i;
    const StateLabel alice = rng.bit() ? StateLabel::V : StateLabel::U;
    rec.alice_bit = alice == StateLabel::V ? 1 : 0;

    bool faked_click = false;
    if (s.eve_present) {
      const double draw = rng.uniform();
      OutcomeKind outcome;
      if (draw < model.p_correct) {
        outcome = OutcomeKind::Correct;
        ++tally.eve_correct;
        rec.eve_outcome = EveOutcomeCode::Correct;
      } else if (draw < model.p_conclusive) {
        outcome = OutcomeKind::Error;
        ++tally.eve_error;
        rec.eve_outcome = EveOutcomeCode::Error;
      } else {
        outcome = OutcomeKind::Inconclusive;
        ++tally.eve_inconclusive;
        rec.eve_outcome = EveOutcomeCode::Inconclusive;
      }
      const StateLabel measured =
          outcome == OutcomeKind::Error ? other(alice) : alice;
      const FeedForwardAction action = feed_forward(outcome, measured, s.strategy, rng);
      if (action.resends()) {
        ++tally.resends;
        rec.action = PulseActionCode::Resend;
        if (rng.bernoulli(s.strategy.fake_click_prob)) {
          faked_click = true;
          ++tally.faked_clicks;
          const bool bit = *action.resend_label == StateLabel::V;
          rec.bob_click = true;
          rec.bob_bit = bit ? 1 : 0;
          rec.detector_a_click = !bit;
          rec.detector_b_click = bit;
        }
      } else {
        ++tally.blocked;
        rec.action = PulseActionCode::Block;
      }
      if (!faked_click) {
        // A blinded gate is saturated by the faked state; dark counts only
        // fire on slots without one.
        const bool dark_a = rng.bernoulli(model.dark_per_detector);
        const bool dark_b = rng.bernoulli(model.dark_per_detector);
        if (dark_a || dark_b) {
          ++tally.dark_clicks;
          rec.bob_click = true;
          rec.detector_a_click = dark_a;
          rec.detector_b_click = dark_b;
          if (dark_a && dark_b) {
            ++tally.double_clicks;
            rec.bob_bit = rng.bit() ? 1 : 0;
          } else {
            rec.bob_bit = dark_b ? 1 : 0;
          }
        }
      }
    } else {
      // Honest run: each detector is an independently thinned signal + dark
      // process; the signal rate of the matching detector reflects Bob's
      // POVM statistics and intrinsic misalignment.
      rec.action = PulseActionCode::Honest;
      const bool sig_match = rng.bernoulli(model.p_sig_match);
      const bool sig_other = rng.bernoulli(model.p_sig_other);
      const bool dark_a = rng.bernoulli(model.dark_per_detector);
      const bool dark_b = rng.bernoulli(model.dark_per_detector);
      const bool a_click =
          (alice == StateLabel::U ? sig_match : sig_other) || dark_a;
      const bool b_click =
          (alice == StateLabel::V ? sig_match : sig_other) || dark_b;
      if (a_click || b_click) {
        rec.bob_click = true;
        if (a_click && b_click) {
          ++tally.double_clicks;
          rec.bob_bit = rng.bit() ? 1 : 0;
        } else {
          rec.bob_bit = b_click ? 1 : 0;
        }
        if (!sig_match && !sig_other) ++tally.dark_clicks;
      }
      rec.detector_a_click = a_click;
      rec.detector_b_click = b_click;
    }

    if (rec.bob_click) {
      ++tally.bob_clicks;
      if (rec.bob_bit != static_cast<int8_t>(rec.alice_bit)) ++tally.bob_errors;
    }
    if (collect_log) log.push_back(rec);
  }
}

}  // namespace

SimulationResult simulate(const Scenario& scenario, const SimulateOptions& options) {
  const Tolerances tol;
  scenario.channel.validate();
  scenario.strategy.validate();
  detail::check_intrinsic_error(scenario.intrinsic_error);

  const PulseModel model = make_model(scenario, tol);
  const int64_t n = scenario.channel.pulse_count_N;
  const int64_t shard_count = (n + kShardSize - 1) / kShardSize;

  std::vector<Tally> tallies(static_cast<size_t>(shard_count));
  std::vector<std::vector<ClickRecord>> logs(static_cast<size_t>(shard_count));

  int threads = options.threads;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  threads = static_cast<int>(std::min<int64_t>(threads, shard_count));

  std::atomic<int64_t> next_shard{0};
  auto worker = [&]() {
    for (;;) {
      const int64_t shard = next_shard.fetch_add(1);
      if (shard >= shard_count) break;
      const int64_t begin = shard * kShardSize;
      const int64_t end = std::min(n, begin + kShardSize);
      run_shard(scenario, model, begin, end, static_cast<uint64_t>(shard),
                options.collect_log, tallies[static_cast<size_t>(shard)],
                logs[static_cast<size_t>(shard)]);
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Tally total;
  for (const Tally& t : tallies) total += t;

  SimulationResult result;
  if (options.collect_log) {
    result.log.reserve(static_cast<size_t>(n));
    for (auto& shard_log : logs) {
      result.log.insert(result.log.end(), shard_log.begin(), shard_log.end());
    }
  }

  SimulationReport& report = result.report;
  report.pulse_count = n;
  report.eve_correct = total.eve_correct;
  report.eve_error = total.eve_error;
  report.eve_inconclusive = total.eve_inconclusive;
  report.eve_gain_GE = total.eve_correct + total.eve_error;
  report.resends = total.resends;
  report.blocked = total.blocked;
  report.faked_clicks = total.faked_clicks;
  report.dark_clicks = total.dark_clicks;
  report.bob_clicks = total.bob_clicks;
  report.bob_errors = total.bob_errors;
  report.double_clicks = total.double_clicks;
  report.observed_qber =
      total.bob_clicks > 0
          ? static_cast<double>(total.bob_errors) / static_cast<double>(total.bob_clicks)
          : 0.0;
  report.eve_key_knowledge_fraction =
      total.bob_clicks > 0
          ? static_cast<double>(total.faked_clicks) / static_cast<double>(total.bob_clicks)
          : 0.0;

  const BaselineStats baseline =
      baseline_stats(scenario.channel, scenario.bob_mu, scenario.w,
                     scenario.intrinsic_error, tol);
  report.expected_gain_GB = baseline.gain_GB;
  report.expected_qber_EB = baseline.qber_EB;
  report.feasibility =
      !scenario.eve_present ||
      attack_feasible(scenario.w, scenario.strategy.mu, baseline, n, tol);
  return result;
}

}  // namespace qca
