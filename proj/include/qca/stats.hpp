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

#ifndef QCA_STATS_HPP
#define QCA_STATS_HPP

#include <cmath>
#include <sstream>

#include "qca/errors.hpp"

namespace qca {

/// Two-sided normal tail probability of a z-score: P(|Z| > z) = erfc(z/sqrt(2)).
inline double significance_from_z(double z) {
  return std::erfc(z / std::sqrt(2.0));
}

/// Inverse of significance_from_z on z in [0, 40], by bisection.
inline double z_from_significance(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream os;
    os << "z_from_significance: significance must lie in (0, 1], got " << alpha;
    throw OutOfRangeError(os.str());
  }
  double lo = 0.0;
  double hi = 40.0;
  if (significance_from_z(hi) >= alpha) return hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (significance_from_z(mid) >= alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qca

#endif  // QCA_STATS_HPP
