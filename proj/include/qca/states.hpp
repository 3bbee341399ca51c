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

#ifndef QCA_STATES_HPP
#define QCA_STATES_HPP

#include <cmath>
#include <sstream>
#include <utility>

#include "qca/errors.hpp"
#include "qca/types.hpp"

namespace qca {

/// Which of the two signal states is meant.
enum class StateLabel { U = 0, V = 1 };

inline StateLabel other(StateLabel s) {
  return s == StateLabel::U ? StateLabel::V : StateLabel::U;
}

/// Two pure states with real overlap w, embedded in a fixed orthonormal
/// basis: psi_u = (1, 0), psi_v = (w, sqrt(1 - w^2)).
template <typename Scalar>
struct StatePair {
  Scalar overlap_w;
  ComplexVector<Scalar> psi_u;
  ComplexVector<Scalar> psi_v;

  const ComplexVector<Scalar>& state(StateLabel s) const {
    return s == StateLabel::U ? psi_u : psi_v;
  }
};

/// Realizes an abstract overlap w in [0, 1) as concrete unit vectors.
template <typename Scalar>
StatePair<Scalar> embed_states(Scalar w) {
  if (!(w >= Scalar(0) && w < Scalar(1))) {
    std::ostringstream os;
    os << "embed_states: overlap w must lie in [0, 1), got " << w;
    throw OutOfRangeError(os.str());
  }
  StatePair<Scalar> pair;
  pair.overlap_w = w;
  pair.psi_u = ComplexVector<Scalar>::Zero(2);
  pair.psi_v = ComplexVector<Scalar>::Zero(2);
  pair.psi_u(0) = std::complex<Scalar>(1, 0);
  pair.psi_v(0) = std::complex<Scalar>(w, 0);
  pair.psi_v(1) = std::complex<Scalar>(std::sqrt((Scalar(1) - w) * (Scalar(1) + w)), 0);
  return pair;
}

/// Non-normalized discrimination vectors phi_u = psi_u - mu*psi_v and
/// phi_v = mu*psi_u - psi_v. Their outer products generate the POVM.
template <typename Scalar>
std::pair<ComplexVector<Scalar>, ComplexVector<Scalar>> phi_vectors(
    const StatePair<Scalar>& pair, Scalar mu) {
  if (!(mu >= Scalar(0))) {
    std::ostringstream os;
    os << "phi_vectors: mu must be >= 0, got " << mu;
    throw OutOfRangeError(os.str());
  }
  return {(pair.psi_u - mu * pair.psi_v).eval(),
          (mu * pair.psi_u - pair.psi_v).eval()};
}

}  // namespace qca

#endif  // QCA_STATES_HPP
