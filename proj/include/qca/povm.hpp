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

#ifndef QCA_POVM_HPP
#define QCA_POVM_HPP

#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "qca/linalg.hpp"
#include "qca/states.hpp"

namespace qca {

/// POVM element label: a conclusive "u", a conclusive "v", or the
/// inconclusive element.
enum class MeasurementOutcome { U = 0, V = 1, Inconclusive = 2 };

/// Outcome relative to the state actually sent.
enum class OutcomeKind { Correct = 0, Error = 1, Inconclusive = 2 };

/// Parameters of the two-state POVM family: measurement regime mu,
/// normalization delta, signal overlap w.
template <typename Scalar>
struct PovmParams {
  Scalar mu;
  Scalar delta;
  Scalar w;
};

/// The three-outcome POVM {A_u, A_v, A_?} built from the phi vectors.
template <typename Scalar>
struct TwoStatePovm {
  ComplexMatrix<Scalar> a_u;
  ComplexMatrix<Scalar> a_v;
  ComplexMatrix<Scalar> a_inconclusive;
  PovmParams<Scalar> params;

  const ComplexMatrix<Scalar>& element(MeasurementOutcome x) const {
    switch (x) {
      case MeasurementOutcome::U:
        return a_u;
      case MeasurementOutcome::V:
        return a_v;
      default:
        return a_inconclusive;
    }
  }
};

/// Conditional outcome probabilities given one of the two signal states.
/// By the symmetric construction they do not depend on which one.
template <typename Scalar>
struct OutcomeProbs {
  Scalar p_correct;
  Scalar p_error;
  Scalar p_inconclusive;
};

/// Margin of the positivity constraint: 2*mu/(1+mu^2) - w. The POVM family
/// is valid while this is >= 0 (up to slack).
template <typename Scalar>
Scalar constraint_margin(Scalar w, Scalar mu) {
  return 2 * mu / (1 + mu * mu) - w;
}

namespace detail {

template <typename Scalar>
void check_povm_domain(Scalar w, Scalar mu, const char* who) {
  if (!(w >= Scalar(0) && w < Scalar(1))) {
    std::ostringstream os;
    os << who << ": overlap w must lie in [0, 1), got " << w;
    throw OutOfRangeError(os.str());
  }
  if (!(mu >= Scalar(0))) {
    std::ostringstream os;
    os << who << ": mu must be >= 0, got " << mu;
    throw OutOfRangeError(os.str());
  }
}

template <typename Scalar>
void check_constraint(Scalar w, Scalar mu, const Tolerances& tol, const char* who) {
  const Scalar margin = constraint_margin(w, mu);
  if (margin < -static_cast<Scalar>(tol.constraint_slack)) {
    std::ostringstream os;
    os << who << ": positivity constraint violated, 2*mu/(1+mu^2) = "
       << 2 * mu / (1 + mu * mu) << " < w = " << w;
    throw ConstraintViolatedError(os.str());
  }
}

}  // namespace detail

/// Normalization delta = (1-w)(1+mu)^2 that pins the top eigenvalue of
/// A_u + A_v at exactly 1, minimizing the inconclusive probability while
/// keeping A_? positive semi-definite.
template <typename Scalar>
Scalar calibrate_delta(Scalar w, Scalar mu, const Tolerances& tol = Tolerances{}) {
  detail::check_povm_domain(w, mu, "calibrate_delta");
  detail::check_constraint(w, mu, tol, "calibrate_delta");
  return (1 - w) * (1 + mu) * (1 + mu);
}

/// POVM with an explicit normalization delta. No positivity check: with an
/// uncalibrated delta the inconclusive element may be indefinite, which is
/// exactly what negative-control tests need.
template <typename Scalar>
TwoStatePovm<Scalar> build_povm_with_delta(Scalar w, Scalar mu, Scalar delta) {
  detail::check_povm_domain(w, mu, "build_povm_with_delta");
  if (!(delta > Scalar(0))) {
    std::ostringstream os;
    os << "build_povm_with_delta: delta must be > 0, got " << delta;
    throw OutOfRangeError(os.str());
  }
  const StatePair<Scalar> pair = embed_states(w);
  const auto [phi_u, phi_v] = phi_vectors(pair, mu);

  TwoStatePovm<Scalar> povm;
  povm.a_u = (phi_u * phi_u.adjoint() / delta).eval();
  povm.a_v = (phi_v * phi_v.adjoint() / delta).eval();
  povm.a_inconclusive =
      (ComplexMatrix<Scalar>::Identity(2, 2) - povm.a_u - povm.a_v).eval();
  povm.params = PovmParams<Scalar>{mu, delta, w};
  return povm;
}

/// Calibrated three-outcome POVM for overlap w and regime mu.
template <typename Scalar>
TwoStatePovm<Scalar> build_povm(Scalar w, Scalar mu,
                                const Tolerances& tol = Tolerances{}) {
  return build_povm_with_delta(w, mu, calibrate_delta(w, mu, tol));
}

/// Closed-form outcome probabilities at the calibrated delta:
///   p_correct = (1-mu*w)^2 / ((1-w)(1+mu)^2)
///   p_error   = (w-mu)^2   / ((1-w)(1+mu)^2)
/// and p_inconclusive = 1 - p_correct - p_error, which algebraically equals
/// (1+w)(1+mu^2)(2*mu/(1+mu^2) - w) / ((1-w)(1+mu)^2).
template <typename Scalar>
OutcomeProbs<Scalar> outcome_probs_closed_form(Scalar w, Scalar mu,
                                               const Tolerances& tol = Tolerances{}) {
  const Scalar delta = calibrate_delta(w, mu, tol);
  OutcomeProbs<Scalar> probs;
  probs.p_correct = (1 - mu * w) * (1 - mu * w) / delta;
  probs.p_error = (w - mu) * (w - mu) / delta;
  probs.p_inconclusive = 1 - probs.p_correct - probs.p_error;
  assert(std::abs(probs.p_inconclusive -
                  (1 + w) * (1 + mu * mu) * constraint_margin(w, mu) / delta) <=
         static_cast<Scalar>(tol.prob_agreement));
  return probs;
}

/// Born-rule probabilities Tr(A_x |psi><psi|) for the sent state, folded to
/// (correct, error, inconclusive). Cross-validation surface for the closed
/// form.
template <typename Scalar>
OutcomeProbs<Scalar> outcome_probs_born(const TwoStatePovm<Scalar>& povm,
                                        const StatePair<Scalar>& pair,
                                        StateLabel sent) {
  const ComplexVector<Scalar>& psi = pair.state(sent);
  const auto born = [&psi](const ComplexMatrix<Scalar>& a) {
    return std::real(psi.dot(a * psi));
  };
  OutcomeProbs<Scalar> probs;
  const Scalar p_u = born(povm.a_u);
  const Scalar p_v = born(povm.a_v);
  probs.p_correct = sent == StateLabel::U ? p_u : p_v;
  probs.p_error = sent == StateLabel::U ? p_v : p_u;
  probs.p_inconclusive = born(povm.a_inconclusive);
  return probs;
}

/// Named measurement regimes of the family.
enum class MeasurementKind {
  /// Unambiguous discrimination: zero errors, inconclusive rate w (mu = w).
  Usd,
  /// Minimum-error two-outcome measurement with no inconclusive results
  /// (mu saturating the positivity constraint).
  MinError,
};

/// The mu value realizing a named regime at overlap w.
template <typename Scalar>
Scalar special_mu(Scalar w, MeasurementKind kind) {
  if (!(w >= Scalar(0) && w < Scalar(1))) {
    std::ostringstream os;
    os << "special_mu: overlap w must lie in [0, 1), got " << w;
    throw OutOfRangeError(os.str());
  }
  if (kind == MeasurementKind::Usd) {
    return w;
  }
  // (1 - sqrt(1-w^2)) / w, with the w -> 0 limit equal to 0.
  if (w == Scalar(0)) return Scalar(0);
  return (1 - std::sqrt((1 - w) * (1 + w))) / w;
}

/// Per-element check result from validate_povm.
template <typename Scalar>
struct PovmElementCheck {
  Scalar hermiticity_residual;
  Scalar min_eigenvalue;
};

/// Result of validate_povm: completeness residual, per-element eigenvalue
/// floor, and the overall pass/fail verdict.
template <typename Scalar>
struct PovmValidation {
  Scalar completeness_residual;
  std::vector<PovmElementCheck<Scalar>> elements;
  bool passed;
};

/// Checks a POVM candidate of any size/dimension: completeness
/// sum_x A_x = I and positive semi-definiteness of every element.
template <typename Scalar>
PovmValidation<Scalar> validate_povm(const std::vector<ComplexMatrix<Scalar>>& elements,
                                     const Tolerances& tol = Tolerances{}) {
  if (elements.empty()) {
    throw DimensionMismatchError("validate_povm: no elements supplied");
  }
  const Eigen::Index dim = elements.front().rows();
  for (const auto& a : elements) {
    if (a.rows() != a.cols() || a.rows() != dim) {
      throw DimensionMismatchError(
          "validate_povm: elements must be square and share one dimension");
    }
  }

  PovmValidation<Scalar> report;
  ComplexMatrix<Scalar> sum = ComplexMatrix<Scalar>::Zero(dim, dim);
  bool all_psd = true;
  for (const auto& a : elements) {
    sum += a;
    PovmElementCheck<Scalar> check;
    check.hermiticity_residual = max_abs((a - a.adjoint()).eval());
    if (check.hermiticity_residual <= static_cast<Scalar>(tol.povm_completeness)) {
      Tolerances eig_tol = tol;
      eig_tol.hermitian_symmetry = tol.povm_completeness;
      const auto eig = hermitian_eig(a, eig_tol);
      check.min_eigenvalue = eig.values(eig.values.size() - 1);
    } else {
      check.min_eigenvalue = std::numeric_limits<Scalar>::quiet_NaN();
      all_psd = false;
    }
    if (!(check.min_eigenvalue >= -static_cast<Scalar>(tol.povm_completeness))) {
      all_psd = false;
    }
    report.elements.push_back(check);
  }
  report.completeness_residual =
      max_abs((sum - ComplexMatrix<Scalar>::Identity(dim, dim)).eval());
  report.passed = all_psd && report.completeness_residual <=
                                 static_cast<Scalar>(tol.povm_completeness);
  return report;
}

}  // namespace qca

#endif  // QCA_POVM_HPP
