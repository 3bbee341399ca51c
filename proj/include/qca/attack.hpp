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

#ifndef QCA_ATTACK_HPP
#define QCA_ATTACK_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "qca/feed_forward.hpp"
#include "qca/povm.hpp"

namespace qca {

/// Channel and detector baseline: transmittance T, detector efficiency eta,
/// per-gate dark count probability, and the number of pulses Alice sends.
struct ChannelModel {
  double transmittance_T = 1.0;
  double detector_efficiency_eta = 1.0;
  double dark_count_prob = 0.0;
  int64_t pulse_count_N = 1;

  void validate() const {
    if (!(transmittance_T > 0.0 && transmittance_T <= 1.0)) {
      std::ostringstream os;
      os << "ChannelModel: transmittance must lie in (0, 1], got " << transmittance_T;
      throw OutOfRangeError(os.str());
    }
    if (!(detector_efficiency_eta > 0.0 && detector_efficiency_eta <= 1.0)) {
      std::ostringstream os;
      os << "ChannelModel: detector efficiency must lie in (0, 1], got "
         << detector_efficiency_eta;
      throw OutOfRangeError(os.str());
    }
    if (!(dark_count_prob >= 0.0 && dark_count_prob < 1.0)) {
      std::ostringstream os;
      os << "ChannelModel: dark count probability must lie in [0, 1), got "
         << dark_count_prob;
      throw OutOfRangeError(os.str());
    }
    if (pulse_count_N < 1) {
      std::ostringstream os;
      os << "ChannelModel: pulse count must be >= 1, got " << pulse_count_N;
      throw OutOfRangeError(os.str());
    }
  }
};

/// What Bob expects to see without Eve: detection events and error rate.
struct BaselineStats {
  double gain_GB = 0.0;  // expected detections over N pulses
  double qber_EB = 0.0;  // expected bit error rate among detections
};

namespace detail {

inline void check_intrinsic_error(double intrinsic_error) {
  if (!(intrinsic_error >= 0.0 && intrinsic_error <= 0.5)) {
    std::ostringstream os;
    os << "intrinsic_error must lie in [0, 0.5], got " << intrinsic_error;
    throw OutOfRangeError(os.str());
  }
}

}  // namespace detail

/// Eve's conditional error rate e_E = p_error / (p_correct + p_error)
/// among her conclusive outcomes.
inline double conditional_error_rate(double w, double mu,
                                     const Tolerances& tol = Tolerances{}) {
  const OutcomeProbs<double> probs = outcome_probs_closed_form(w, mu, tol);
  return probs.p_error / (probs.p_correct + probs.p_error);
}

/// Bob's expected detections and error rate without Eve. Bob measures with
/// the same two-state POVM family at his own regime bob_mu. Per pulse:
///   p_signal = T * eta * (1 - P_?)           conclusive signal click
///   p_click  = p_signal + (1 - p_signal) * dark
///   gain_GB  = N * p_click
/// and the error rate mixes the POVM conditional error with the intrinsic
/// misalignment rate on signal clicks and 0.5 on dark clicks:
///   e_mix    = e_povm * (1 - intrinsic) + (1 - e_povm) * intrinsic
///   qber_EB  = (p_signal * e_mix + (1 - p_signal) * dark * 0.5) / p_click
inline BaselineStats baseline_stats(const ChannelModel& channel, double bob_mu,
                                    double w, double intrinsic_error,
                                    const Tolerances& tol = Tolerances{}) {
  channel.validate();
  detail::check_intrinsic_error(intrinsic_error);
  const OutcomeProbs<double> probs = outcome_probs_closed_form(w, bob_mu, tol);
  const double conclusive = probs.p_correct + probs.p_error;
  const double p_signal =
      channel.transmittance_T * channel.detector_efficiency_eta * conclusive;
  const double p_click =
      p_signal + (1.0 - p_signal) * channel.dark_count_prob;
  const double e_povm = probs.p_error / conclusive;
  const double e_mix =
      e_povm * (1.0 - intrinsic_error) + (1.0 - e_povm) * intrinsic_error;

  BaselineStats stats;
  stats.gain_GB = static_cast<double>(channel.pulse_count_N) * p_click;
  stats.qber_EB =
      (p_signal * e_mix + (1.0 - p_signal) * channel.dark_count_prob * 0.5) /
      p_click;
  return stats;
}

/// Eve's expected detection events over N pulses:
/// G_E = N * (p_correct + p_error).
inline double eve_gain(double w, double mu, int64_t N,
                       const Tolerances& tol = Tolerances{}) {
  const OutcomeProbs<double> probs = outcome_probs_closed_form(w, mu, tol);
  return static_cast<double>(N) * (probs.p_correct + probs.p_error);
}

/// True iff Eve's detection rate can cover Bob's: G_E >= G_B (inclusive).
inline bool attack_feasible(double w, double mu, const BaselineStats& baseline,
                            int64_t N, const Tolerances& tol = Tolerances{}) {
  return eve_gain(w, mu, N, tol) >= baseline.gain_GB;
}

/// Solves the matching conditions G_E(xi) = G_B and E_E(zeta) = E_B:
///   xi   = G_B / G_E
///   zeta = (E_B - e_E) / (1 - 2 e_E)
/// Raises InfeasibleError(Rate) when G_E < G_B and InfeasibleError(Error)
/// when e_E > E_B: Eve can add errors but never remove her own.
inline StrategyParams solve_matching(double w, double mu,
                                     const BaselineStats& baseline, int64_t N,
                                     const Tolerances& tol = Tolerances{}) {
  const double ge = eve_gain(w, mu, N, tol);
  if (ge < baseline.gain_GB) {
    std::ostringstream os;
    os << "solve_matching: rate infeasible, G_E = " << ge << " < G_B = "
       << baseline.gain_GB;
    throw InfeasibleError(InfeasibleError::Kind::Rate, os.str());
  }
  const double e_eve = conditional_error_rate(w, mu, tol);
  if (e_eve > baseline.qber_EB + tol.constraint_slack) {
    std::ostringstream os;
    os << "solve_matching: error infeasible, Eve's conditional error " << e_eve
       << " exceeds E_B = " << baseline.qber_EB;
    throw InfeasibleError(InfeasibleError::Kind::Error, os.str());
  }

  StrategyParams strategy;
  strategy.mu = mu;
  strategy.resend_throttle_xi = std::min(1.0, baseline.gain_GB / ge);
  const double denom = 1.0 - 2.0 * e_eve;
  double zeta = denom > 0.0 ? (baseline.qber_EB - e_eve) / denom : 0.0;
  strategy.flip_prob_zeta = std::min(0.5, std::max(0.0, zeta));
  return strategy;
}

/// One row of a feasibility sweep over mu.
struct SweepPoint {
  double mu = 0.0;
  bool valid = false;  // positivity constraint satisfied at this mu
  OutcomeProbs<double> probs{0.0, 0.0, 0.0};
  double gain_GE = 0.0;
  bool feasible = false;
  double e_eve = 0.0;
  std::optional<double> zeta;  // empty when matching is infeasible
};

/// Evaluates gain, feasibility, and the matching solution over a mu grid.
/// Constraint-violating entries are marked invalid rather than fatal.
inline std::vector<SweepPoint> sweep_feasibility(double w,
                                                 const std::vector<double>& mu_grid,
                                                 const BaselineStats& baseline,
                                                 int64_t N,
                                                 const Tolerances& tol = Tolerances{}) {
  std::vector<SweepPoint> points;
  points.reserve(mu_grid.size());
  for (double mu : mu_grid) {
    SweepPoint point;
    point.mu = mu;
    try {
      point.probs = outcome_probs_closed_form(w, mu, tol);
    } catch (const ValidationError&) {
      points.push_back(point);
      continue;
    }
    point.valid = true;
    point.gain_GE = static_cast<double>(N) * (point.probs.p_correct + point.probs.p_error);
    point.feasible = point.gain_GE >= baseline.gain_GB;
    point.e_eve = point.probs.p_error / (point.probs.p_correct + point.probs.p_error);
    try {
      point.zeta = solve_matching(w, mu, baseline, N, tol).flip_prob_zeta;
    } catch (const InfeasibleError&) {
      point.zeta = std::nullopt;
    }
    points.push_back(point);
  }
  return points;
}

/// Linearly spaced mu grid from the no-inconclusive end (min-error regime)
/// to the errorless end (unambiguous regime) at overlap w.
inline std::vector<double> default_mu_grid(double w, int steps) {
  if (steps < 2) {
    std::ostringstream os;
    os << "default_mu_grid: need at least 2 steps, got " << steps;
    throw OutOfRangeError(os.str());
  }
  const double lo = special_mu(w, MeasurementKind::MinError);
  const double hi = special_mu(w, MeasurementKind::Usd);
  std::vector<double> grid(static_cast<size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return grid;
}

}  // namespace qca

#endif  // QCA_ATTACK_HPP
