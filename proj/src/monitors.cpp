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

#include "qca/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qca {

void MonitorConfig::validate() const {
  if (window_size != 0 && window_size < 100) {
    std::ostringstream os;
    os << "MonitorConfig: window_size must be 0 (whole log) or >= 100, got "
       << window_size;
    throw OutOfRangeError(os.str());
  }
  if (!(determinism_threshold > 0.0 && determinism_threshold <= 1.0)) {
    std::ostringstream os;
    os << "MonitorConfig: determinism_threshold must lie in (0, 1], got "
       << determinism_threshold;
    throw OutOfRangeError(os.str());
  }
  if (!(coincidence_threshold >= 0.0 && coincidence_threshold <= 1.0)) {
    std::ostringstream os;
    os << "MonitorConfig: coincidence_threshold must lie in [0, 1], got "
       << coincidence_threshold;
    throw OutOfRangeError(os.str());
  }
}

namespace {

int64_t effective_window(const std::vector<ClickRecord>& log,
                         const MonitorConfig& config) {
  const int64_t n = static_cast<int64_t>(log.size());
  const int64_t window = config.window_size == 0 ? n : config.window_size;
  if (n < window || window < 100) {
    std::ostringstream os;
    os << "monitor: log holds " << n << " pulses, need a full window of "
       << std::max<int64_t>(window, 100);
    throw InsufficientDataError(os.str());
  }
  return window;
}

}  // namespace

MonitorVerdict click_statistics_monitor(const std::vector<ClickRecord>& log,
                                        const MonitorConfig& config,
                                        double expected_rate) {
  config.validate();
  if (!(expected_rate >= 0.0 && expected_rate <= 1.0)) {
    std::ostringstream os;
    os << "click_statistics_monitor: expected_rate must lie in [0, 1], got "
       << expected_rate;
    throw OutOfRangeError(os.str());
  }
  const int64_t window = effective_window(log, config);
  const int64_t windows = static_cast<int64_t>(log.size()) / window;

  MonitorVerdict verdict;
  verdict.window_count = windows;
  verdict.threshold = z_from_significance(config.determinism_threshold);

  const double sigma =
      std::sqrt(static_cast<double>(window) * expected_rate * (1.0 - expected_rate));
  for (int64_t wi = 0; wi < windows; ++wi) {
    int64_t clicks = 0;
    for (int64_t i = wi * window; i < (wi + 1) * window; ++i) {
      if (log[static_cast<size_t>(i)].bob_click) ++clicks;
    }
    const double mean = static_cast<double>(window) * expected_rate;
    double z;
    if (sigma > 0.0) {
      z = std::abs(static_cast<double>(clicks) - mean) / sigma;
    } else {
      z = static_cast<double>(clicks) == mean
              ? 0.0
              : std::numeric_limits<double>::infinity();
    }
    verdict.statistic = std::max(verdict.statistic, z);
  }
  verdict.flagged = verdict.statistic > verdict.threshold;
  return verdict;
}

MonitorVerdict coincidence_monitor(const std::vector<ClickRecord>& log,
                                   const MonitorConfig& config) {
  config.validate();
  const int64_t window = effective_window(log, config);
  const int64_t windows = static_cast<int64_t>(log.size()) / window;

  MonitorVerdict verdict;
  verdict.window_count = windows;
  verdict.threshold = z_from_significance(config.coincidence_threshold);

  bool any_activity = false;
  for (int64_t wi = 0; wi < windows; ++wi) {
    // Per-detector marginals and double clicks, stratified by Alice's bit so
    // that the expectation is exact under conditional independence.
    int64_t n_s[2] = {0, 0};
    int64_t a_s[2] = {0, 0};
    int64_t b_s[2] = {0, 0};
    int64_t doubles = 0;
    for (int64_t i = wi * window; i < (wi + 1) * window; ++i) {
      const ClickRecord& rec = log[static_cast<size_t>(i)];
      const int s = rec.alice_bit ? 1 : 0;
      ++n_s[s];
      if (rec.detector_a_click) ++a_s[s];
      if (rec.detector_b_click) ++b_s[s];
      if (rec.detector_a_click && rec.detector_b_click) ++doubles;
    }
    double expected = 0.0;
    for (int s = 0; s < 2; ++s) {
      if (n_s[s] > 0) {
        expected += static_cast<double>(a_s[s]) * static_cast<double>(b_s[s]) /
                    static_cast<double>(n_s[s]);
      }
    }
    if (expected <= 0.0) continue;  // no joint activity in this window
    any_activity = true;
    const double z =
        std::abs(static_cast<double>(doubles) - expected) / std::sqrt(expected);
    verdict.statistic = std::max(verdict.statistic, z);
  }
  if (!any_activity) {
    throw InsufficientDataError(
        "coincidence_monitor: no detector activity to test");
  }
  verdict.flagged = verdict.statistic > verdict.threshold;
  return verdict;
}

}  // namespace qca
