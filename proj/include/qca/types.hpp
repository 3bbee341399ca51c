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

#ifndef QCA_TYPES_HPP
#define QCA_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace qca {

/// Dense complex square matrix over real scalar `Scalar`. All operators in
/// the toolkit (POVM elements, Kraus factors, unitaries) live in this type.
template <typename Scalar>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixC = ComplexMatrix<double>;
using VectorC = ComplexVector<double>;
using VectorR = RealVector<double>;

/// One record with every numeric tolerance and iteration budget used by the
/// library. Functions take it as a defaulted trailing parameter; all defaults
/// live here.
struct Tolerances {
  /// Max-norm bound on ||m - m^dagger|| for a matrix to count as Hermitian.
  double hermitian_symmetry = 1e-10;
  /// Eigendecomposition must reconstruct the input to this max-norm bound.
  double eig_reconstruction = 1e-10;
  /// ||Q^dagger Q - I|| bound for eigenvector orthonormality.
  double orthonormality = 1e-10;
  /// Eigenvalues above -psd_clamp are clamped to zero in psd_sqrt;
  /// anything more negative is rejected as genuinely indefinite.
  double psd_clamp = 1e-10;
  /// ||r*r - m|| bound for the PSD square root.
  double psd_sqrt_residual = 1e-9;
  /// ||U*S - k|| bound for polar factors.
  double polar_reconstruction = 1e-9;
  /// Eigenvalues of k^dagger k at or below this fraction of the largest are
  /// treated as exact zeros (null directions) in polar_decompose.
  double polar_rank_cutoff = 1e-12;
  /// Default tolerance for is_unitary / is_psd style predicates.
  double predicate_default = 1e-10;
  /// ||sum A_x - I|| bound for POVM completeness.
  double povm_completeness = 1e-10;
  /// Slack allowed on the positivity constraint 2*mu/(1+mu^2) >= w.
  double constraint_slack = 1e-12;
  /// Closed-form and Born-rule probabilities must agree to this bound.
  double prob_agreement = 1e-10;
  /// Outcomes with Born probability below this are treated as impossible.
  double zero_probability = 1e-15;
  /// Cyclic Jacobi sweep budget before NoConvergence is raised.
  int jacobi_max_sweeps = 60;
  /// Off-diagonal Frobenius norm (relative to the matrix scale) at which
  /// the Jacobi iteration stops.
  double jacobi_convergence = 1e-15;
};

}  // namespace qca

#endif  // QCA_TYPES_HPP
