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

#ifndef QCA_KRAUS_HPP
#define QCA_KRAUS_HPP

#include <cmath>
#include <vector>

#include "qca/linalg.hpp"
#include "qca/povm.hpp"
#include "qca/states.hpp"

namespace qca {

/// Kraus operator for one measurement outcome, factored as
/// kraus = unitary_factor * psd_root with psd_root = sqrt(A_x).
template <typename Scalar>
struct KrausRecord {
  MeasurementOutcome label;
  ComplexMatrix<Scalar> kraus;
  ComplexMatrix<Scalar> unitary_factor;
  ComplexMatrix<Scalar> psd_root;
};

/// All three outcome records; trace-preserving over outcomes:
/// sum_x K_x^dagger K_x = I.
template <typename Scalar>
struct KrausSet {
  std::vector<KrausRecord<Scalar>> records;

  const KrausRecord<Scalar>& record(MeasurementOutcome x) const {
    return records[static_cast<size_t>(x)];
  }
};

/// Builds the Kraus set K_x = V_x * sqrt(A_x) for a POVM. `unitaries` is
/// either empty (identity feed-forward for every outcome) or exactly three
/// matrices in outcome order {U, V, Inconclusive}; each must be unitary.
template <typename Scalar>
KrausSet<Scalar> kraus_from_povm(
    const TwoStatePovm<Scalar>& povm,
    const std::vector<ComplexMatrix<Scalar>>& unitaries = {},
    const Tolerances& tol = Tolerances{}) {
  if (!unitaries.empty() && unitaries.size() != 3) {
    throw DimensionMismatchError(
        "kraus_from_povm: expected zero or three feed-forward unitaries");
  }
  const Eigen::Index dim = povm.a_u.rows();
  KrausSet<Scalar> set;
  const MeasurementOutcome labels[3] = {MeasurementOutcome::U, MeasurementOutcome::V,
                                        MeasurementOutcome::Inconclusive};
  for (size_t i = 0; i < 3; ++i) {
    KrausRecord<Scalar> rec;
    rec.label = labels[i];
    rec.psd_root = psd_sqrt(povm.element(labels[i]), tol);
    if (unitaries.empty()) {
      rec.unitary_factor = ComplexMatrix<Scalar>::Identity(dim, dim);
    } else {
      if (!is_unitary(unitaries[i], tol.predicate_default)) {
        throw NotUnitaryError(
            "kraus_from_povm: supplied feed-forward operator is not unitary");
      }
      rec.unitary_factor = unitaries[i];
    }
    rec.kraus = (rec.unitary_factor * rec.psd_root).eval();
    set.records.push_back(std::move(rec));
  }
  return set;
}

/// Eve's normalized ancilla state after observing `outcome`, plus the Born
/// probability that outcome had.
template <typename Scalar>
struct PostMeasurementState {
  OutcomeKind outcome;
  ComplexVector<Scalar> eve_state;
  Scalar norm_prob;
};

/// sqrt(A_outcome) |psi_sent> / sqrt(P(outcome|sent)). Outcomes with
/// (near-)zero probability raise ZeroProbabilityOutcomeError.
template <typename Scalar>
PostMeasurementState<Scalar> post_measurement_state(
    const TwoStatePovm<Scalar>& povm, const StatePair<Scalar>& pair,
    StateLabel sent, OutcomeKind outcome, const Tolerances& tol = Tolerances{}) {
  MeasurementOutcome element_label;
  switch (outcome) {
    case OutcomeKind::Correct:
      element_label = sent == StateLabel::U ? MeasurementOutcome::U : MeasurementOutcome::V;
      break;
    case OutcomeKind::Error:
      element_label = sent == StateLabel::U ? MeasurementOutcome::V : MeasurementOutcome::U;
      break;
    default:
      element_label = MeasurementOutcome::Inconclusive;
      break;
  }
  const ComplexMatrix<Scalar>& a = povm.element(element_label);
  const ComplexVector<Scalar>& psi = pair.state(sent);
  const Scalar prob = std::real(psi.dot(a * psi));
  if (prob <= static_cast<Scalar>(tol.zero_probability)) {
    throw ZeroProbabilityOutcomeError(
        "post_measurement_state: requested outcome has zero Born probability");
  }
  PostMeasurementState<Scalar> out;
  out.outcome = outcome;
  out.norm_prob = prob;
  out.eve_state = (psd_sqrt(a, tol) * psi / std::sqrt(prob)).eval();
  return out;
}

/// Kronecker product of two state vectors; index order (i_a * dim_b + i_b).
template <typename Scalar>
ComplexVector<Scalar> kron(const ComplexVector<Scalar>& a,
                           const ComplexVector<Scalar>& b) {
  ComplexVector<Scalar> out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

/// A product state of the channel subsystem and Eve's ancilla.
template <typename Scalar>
struct JointState {
  ComplexVector<Scalar> channel;
  ComplexVector<Scalar> ancilla;

  ComplexVector<Scalar> to_vector() const { return kron(channel, ancilla); }
};

/// |<before_i|before_j> - <after_i|after_j>|. Zero (up to rounding) whenever
/// one unitary produced both `after` states from the `before` states.
template <typename Scalar>
Scalar overlap_preservation_residual(const ComplexVector<Scalar>& before_i,
                                     const ComplexVector<Scalar>& before_j,
                                     const ComplexVector<Scalar>& after_i,
                                     const ComplexVector<Scalar>& after_j) {
  return std::abs(before_i.dot(before_j) - after_i.dot(after_j));
}

template <typename Scalar>
Scalar overlap_preservation_residual(const JointState<Scalar>& before_i,
                                     const JointState<Scalar>& before_j,
                                     const ComplexVector<Scalar>& after_i,
                                     const ComplexVector<Scalar>& after_j) {
  return overlap_preservation_residual(before_i.to_vector(), before_j.to_vector(),
                                       after_i, after_j);
}

}  // namespace qca

#endif  // QCA_KRAUS_HPP
