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

#ifndef QCA_MONITORS_HPP
#define QCA_MONITORS_HPP

#include <cstdint>
#include <vector>

#include "qca/simulate.hpp"
#include "qca/stats.hpp"

namespace qca {

/// Detector-side monitoring parameters. Thresholds are two-sided
/// significance levels (tail probabilities): a window is flagged when its
/// statistic is less likely than the threshold under the honest model.
/// The conventional "z-threshold 4" corresponds to significance_from_z(4).
struct MonitorConfig {
  /// Pulses per analysis window; 0 = one window spanning the whole log.
  /// Explicit windows must hold at least 100 pulses.
  int64_t window_size = 0;
  /// Significance level for the click-rate (determinism) statistic.
  double determinism_threshold = 6.334248366623996e-05;  // z = 4
  /// Significance level for the coincidence statistic.
  double coincidence_threshold = 6.334248366623996e-05;  // z = 4

  void validate() const;
};

/// Monitor outcome. `statistic` is the largest |z| across windows and
/// `threshold` is the z-score the significance level converts to;
/// flagged iff statistic > threshold.
struct MonitorVerdict {
  bool flagged = false;
  double statistic = 0.0;
  double threshold = 0.0;
  int64_t window_count = 0;
};

/// Compares the observed click rate per window against `expected_rate`
/// (binomial z-score). Catches rate mismatches (e.g. an unthrottled
/// blinding attack); a rate-matched attack is designed to pass this, which
/// is why coincidence monitoring exists.
MonitorVerdict click_statistics_monitor(const std::vector<ClickRecord>& log,
                                        const MonitorConfig& config,
                                        double expected_rate);

/// Compares observed double clicks per window against the
/// conditionally-independent expectation computed from per-detector
/// marginals within each Alice-bit stratum. Faked states drive exactly one
/// detector and suppress the gate's dark counts, so the attack pushes the
/// coincidence count far below that expectation; the statistic is two-sided
/// and catches deviation in either direction.
MonitorVerdict coincidence_monitor(const std::vector<ClickRecord>& log,
                                   const MonitorConfig& config);

}  // namespace qca

#endif  // QCA_MONITORS_HPP
