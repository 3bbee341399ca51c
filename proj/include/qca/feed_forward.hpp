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

#ifndef QCA_FEED_FORWARD_HPP
#define QCA_FEED_FORWARD_HPP

#include <optional>
#include <sstream>

#include "qca/errors.hpp"
#include "qca/povm.hpp"
#include "qca/rng.hpp"
#include "qca/states.hpp"

namespace qca {

/// Eve's knobs: measurement regime mu, resend throttle xi in [0,1] (rate
/// matching), bit-flip probability zeta in [0,0.5] (error matching), and the
/// probability that a resent faked state actually triggers Bob's detector.
struct StrategyParams {
  double mu = 0.0;
  double resend_throttle_xi = 1.0;
  double flip_prob_zeta = 0.0;
  double fake_click_prob = 1.0;

  void validate() const {
    if (!(resend_throttle_xi >= 0.0 && resend_throttle_xi <= 1.0)) {
      std::ostringstream os;
      os << "StrategyParams: xi must lie in [0, 1], got " << resend_throttle_xi;
      throw OutOfRangeError(os.str());
    }
    if (!(flip_prob_zeta >= 0.0 && flip_prob_zeta <= 0.5)) {
      std::ostringstream os;
      os << "StrategyParams: zeta must lie in [0, 0.5], got " << flip_prob_zeta;
      throw OutOfRangeError(os.str());
    }
    if (!(fake_click_prob > 0.0 && fake_click_prob <= 1.0)) {
      std::ostringstream os;
      os << "StrategyParams: fake_click_prob must lie in (0, 1], got "
         << fake_click_prob;
      throw OutOfRangeError(os.str());
    }
  }
};

/// What Eve does to the channel after one measurement: resend a faked state
/// carrying `resend_label`, or replace the slot with vacuum (blank = block).
/// `amplitude_scale` is the blinding amplitude (informational; 0 for vacuum).
struct FeedForwardAction {
  std::optional<StateLabel> resend_label;  // nullopt = vacuum / blocked slot
  double amplitude_scale = 0.0;
  bool flip = false;

  bool resends() const { return resend_label.has_value(); }
};

/// Decides the action for one measurement outcome. Inconclusive outcomes are
/// always blocked. Conclusive outcomes are blocked with probability 1 - xi
/// (rate matching) and otherwise resent, flipping the label with probability
/// zeta (error matching). Coin order: throttle first, then flip.
inline FeedForwardAction feed_forward(OutcomeKind outcome, StateLabel measured_label,
                                      const StrategyParams& strategy,
                                      RandomStream& rng) {
  FeedForwardAction action;
  if (outcome == OutcomeKind::Inconclusive) {
    return action;
  }
  if (!rng.bernoulli(strategy.resend_throttle_xi)) {
    return action;
  }
  action.flip = rng.bernoulli(strategy.flip_prob_zeta);
  action.resend_label = action.flip ? other(measured_label) : measured_label;
  action.amplitude_scale = 1.0;
  return action;
}

}  // namespace qca

#endif  // QCA_FEED_FORWARD_HPP
