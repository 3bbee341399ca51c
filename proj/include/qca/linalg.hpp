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

#ifndef QCA_LINALG_HPP
#define QCA_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <vector>

#include "qca/errors.hpp"
#include "qca/types.hpp"

namespace qca {

/// Largest absolute entry of a dense expression.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real max_abs(
    const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// Hermitian eigendecomposition result. Eigenvalues sorted descending,
/// eigenvectors are the matching orthonormal columns of `vectors`.
template <typename Scalar>
struct EigenDecomposition {
  RealVector<Scalar> values;
  ComplexMatrix<Scalar> vectors;

  ComplexMatrix<Scalar> reconstruct() const {
    return vectors * values.template cast<std::complex<Scalar>>().asDiagonal() *
           vectors.adjoint();
  }
};

/// Polar factors of a square matrix k = unitary * psd_root.
template <typename Scalar>
struct PolarFactors {
  ComplexMatrix<Scalar> unitary;
  ComplexMatrix<Scalar> psd_root;
};

namespace detail {

template <typename Scalar>
void check_square_finite(const ComplexMatrix<Scalar>& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    std::ostringstream os;
    os << who << ": expected a square matrix of dim >= 1, got " << m.rows()
       << "x" << m.cols();
    throw DimensionMismatchError(os.str());
  }
  if (!all_finite(m)) {
    throw ValidationError(std::string(who) + ": matrix has non-finite entries");
  }
}

/// One cyclic Jacobi sweep over the strict upper triangle of a Hermitian
/// matrix held in `a`; rotations are accumulated into `q`. Sweep order is
/// fixed (row-major over p < q), so the result is reproducible bit for bit.
template <typename Scalar>
void jacobi_sweep(ComplexMatrix<Scalar>& a, ComplexMatrix<Scalar>& q) {
  using Complex = std::complex<Scalar>;
  const Eigen::Index n = a.rows();
  for (Eigen::Index p = 0; p < n - 1; ++p) {
    for (Eigen::Index r = p + 1; r < n; ++r) {
      const Complex apr = a(p, r);
      const Scalar mag = std::abs(apr);
      if (mag == Scalar(0)) continue;

      // Phase factor such that conj(phase) * a(p,r) is real positive.
      const Complex phase = apr / mag;
      const Scalar app = std::real(a(p, p));
      const Scalar arr = std::real(a(r, r));

      // Annihilation condition for the block is t^2 - 2*tau*t - 1 = 0 with
      // tau = (a_rr - a_pp) / (2|a_pr|); take the smaller-magnitude root.
      const Scalar tau = (arr - app) / (2 * mag);
      Scalar t;
      if (tau >= Scalar(0)) {
        t = Scalar(-1) / (tau + std::sqrt(Scalar(1) + tau * tau));
      } else {
        t = Scalar(1) / (-tau + std::sqrt(Scalar(1) + tau * tau));
      }
      const Scalar c = Scalar(1) / std::sqrt(Scalar(1) + t * t);
      const Scalar s = t * c;

      // Columns/rows p and r of a <- J^dagger a J with
      // J(p,p)=c, J(p,r)=-s*phase, J(r,p)=s*conj(phase), J(r,r)=c.
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == p || k == r) continue;
        const Complex akp = a(k, p);
        const Complex akr = a(k, r);
        a(k, p) = c * akp + s * std::conj(phase) * akr;
        a(p, k) = std::conj(a(k, p));
        a(k, r) = -s * phase * akp + c * akr;
        a(r, k) = std::conj(a(k, r));
      }
      const Scalar app_new = c * c * app + s * s * arr + 2 * c * s * mag;
      const Scalar arr_new = s * s * app + c * c * arr - 2 * c * s * mag;
      a(p, p) = Complex(app_new, 0);
      a(r, r) = Complex(arr_new, 0);
      a(p, r) = Complex(0, 0);
      a(r, p) = Complex(0, 0);

      for (Eigen::Index k = 0; k < n; ++k) {
        const Complex qkp = q(k, p);
        const Complex qkr = q(k, r);
        q(k, p) = c * qkp + s * std::conj(phase) * qkr;
        q(k, r) = -s * phase * qkp + c * qkr;
      }
    }
  }
}

template <typename Scalar>
Scalar off_diagonal_norm(const ComplexMatrix<Scalar>& a) {
  Scalar acc = 0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index p = 0; p < n - 1; ++p) {
    for (Eigen::Index r = p + 1; r < n; ++r) {
      acc += std::norm(a(p, r));
    }
  }
  return std::sqrt(2 * acc);
}

/// Rotate each eigenvector so its largest-magnitude component is real
/// non-negative (first such index on ties). Pure convention; keeps
/// degenerate spectra from producing arbitrary phases.
template <typename Scalar>
void canonicalize_phases(ComplexMatrix<Scalar>& q) {
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    Eigen::Index imax = 0;
    Scalar best = -1;
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
      const Scalar m = std::abs(q(i, j));
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    if (best > Scalar(0)) {
      const std::complex<Scalar> z = q(imax, j) / best;
      q.col(j) *= std::conj(z);
    }
  }
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Intended for the small dimensions this toolkit works in (2..8); the sweep
/// order is deterministic so repeated runs agree bit for bit.
///
/// Throws NotHermitianError if ||m - m^dagger|| exceeds
/// tol.hermitian_symmetry, NoConvergenceError if the sweep budget runs out.
template <typename Scalar>
EigenDecomposition<Scalar> hermitian_eig(const ComplexMatrix<Scalar>& m,
                                         const Tolerances& tol = Tolerances{}) {
  detail::check_square_finite(m, "hermitian_eig");
  const Scalar sym = max_abs((m - m.adjoint()).eval());
  if (sym > static_cast<Scalar>(tol.hermitian_symmetry)) {
    std::ostringstream os;
    os << "hermitian_eig: symmetry residual " << sym << " exceeds "
       << tol.hermitian_symmetry;
    throw NotHermitianError(os.str());
  }

  const Eigen::Index n = m.rows();
  // Work on the exactly-Hermitian average so stray asymmetry below the
  // tolerance cannot leak into the iteration.
  ComplexMatrix<Scalar> a = ((m + m.adjoint()) / Scalar(2)).eval();
  ComplexMatrix<Scalar> q = ComplexMatrix<Scalar>::Identity(n, n);

  const Scalar scale = std::max(Scalar(1), max_abs(a));
  const Scalar stop = static_cast<Scalar>(tol.jacobi_convergence) * scale;

  bool converged = detail::off_diagonal_norm(a) <= stop;
  for (int sweep = 0; !converged && sweep < tol.jacobi_max_sweeps; ++sweep) {
    detail::jacobi_sweep(a, q);
    converged = detail::off_diagonal_norm(a) <= stop;
  }
  if (!converged) {
    throw NoConvergenceError("hermitian_eig: Jacobi sweep budget exhausted");
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) {
                     return std::real(a(i, i)) > std::real(a(j, j));
                   });

  EigenDecomposition<Scalar> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values(j) = std::real(a(order[j], order[j]));
    out.vectors.col(j) = q.col(order[j]);
  }
  detail::canonicalize_phases(out.vectors);
  return out;
}

/// True iff ||m^dagger m - I|| <= tol_value.
template <typename Scalar>
bool is_unitary(const ComplexMatrix<Scalar>& m, double tol_value) {
  detail::check_square_finite(m, "is_unitary");
  const Eigen::Index n = m.rows();
  return max_abs((m.adjoint() * m - ComplexMatrix<Scalar>::Identity(n, n)).eval()) <=
         static_cast<Scalar>(tol_value);
}

/// True iff m is Hermitian within tol_value and its smallest eigenvalue is
/// >= -tol_value.
template <typename Scalar>
bool is_psd(const ComplexMatrix<Scalar>& m, double tol_value) {
  detail::check_square_finite(m, "is_psd");
  if (max_abs((m - m.adjoint()).eval()) > static_cast<Scalar>(tol_value)) {
    return false;
  }
  Tolerances tol;
  tol.hermitian_symmetry = tol_value;
  const auto eig = hermitian_eig(m, tol);
  return eig.values(eig.values.size() - 1) >= -static_cast<Scalar>(tol_value);
}

/// Hermitian PSD square root r with r*r = m. Eigenvalues in
/// [-tol.psd_clamp, 0) are clamped to zero; more negative ones raise
/// NotPsdError.
template <typename Scalar>
ComplexMatrix<Scalar> psd_sqrt(const ComplexMatrix<Scalar>& m,
                               const Tolerances& tol = Tolerances{}) {
  const auto eig = hermitian_eig(m, tol);
  RealVector<Scalar> lam = eig.values;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < -static_cast<Scalar>(tol.psd_clamp)) {
      std::ostringstream os;
      os << "psd_sqrt: eigenvalue " << lam(i) << " below -" << tol.psd_clamp;
      throw NotPsdError(os.str());
    }
    lam(i) = lam(i) > Scalar(0) ? std::sqrt(lam(i)) : Scalar(0);
  }
  ComplexMatrix<Scalar> r =
      eig.vectors * lam.template cast<std::complex<Scalar>>().asDiagonal() *
      eig.vectors.adjoint();
  // Exact Hermitian symmetrization of the rounded product.
  return ((r + r.adjoint()) / Scalar(2)).eval();
}

/// Polar decomposition k = U * S with U unitary and S = psd_sqrt(k^dagger k).
/// For rank-deficient k the unitary is completed over the null space by
/// Gram-Schmidt on the standard basis vectors taken in index order.
template <typename Scalar>
PolarFactors<Scalar> polar_decompose(const ComplexMatrix<Scalar>& k,
                                     const Tolerances& tol = Tolerances{}) {
  using Complex = std::complex<Scalar>;
  detail::check_square_finite(k, "polar_decompose");
  const Eigen::Index n = k.rows();

  const ComplexMatrix<Scalar> gram = (k.adjoint() * k).eval();
  const auto eig = hermitian_eig(gram, tol);

  // Rank decision on the eigenvalue scale: forming k^dagger k squares the
  // singular values, so rounding noise sits near eps * lambda_max and a
  // relative floor well above that cleanly separates genuine null
  // directions.
  const Scalar lam_floor = static_cast<Scalar>(tol.polar_rank_cutoff) *
                           std::max(Scalar(1), eig.values(0));

  ComplexMatrix<Scalar> c(n, n);
  RealVector<Scalar> sigma(n);
  std::vector<bool> filled(static_cast<size_t>(n), false);
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (eig.values(j) > lam_floor) {
      sigma(j) = std::sqrt(eig.values(j));
      c.col(j) = (k * eig.vectors.col(j)) / sigma(j);
      filled[static_cast<size_t>(j)] = true;
    } else {
      sigma(j) = Scalar(0);
      c.col(j).setZero();
      null_cols.push_back(j);
    }
  }

  // Complete the range basis over the null space: for each missing column,
  // Gram-Schmidt the standard basis vectors in index order and keep the one
  // with the largest residual (ties resolve to the lowest index).
  for (Eigen::Index slot : null_cols) {
    ComplexVector<Scalar> best = ComplexVector<Scalar>::Zero(n);
    Scalar best_norm = -1;
    for (Eigen::Index e = 0; e < n; ++e) {
      ComplexVector<Scalar> v = ComplexVector<Scalar>::Zero(n);
      v(e) = Complex(1, 0);
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = 0; j < n; ++j) {
          if (!filled[static_cast<size_t>(j)]) continue;
          v -= (c.col(j).dot(v)) * c.col(j);
        }
      }
      const Scalar nv = v.norm();
      if (nv > best_norm) {
        best_norm = nv;
        best = v;
      }
    }
    c.col(slot) = best / best_norm;
    filled[static_cast<size_t>(slot)] = true;
  }

  PolarFactors<Scalar> out;
  out.unitary = (c * eig.vectors.adjoint()).eval();
  ComplexMatrix<Scalar> s = eig.vectors *
                            sigma.template cast<Complex>().asDiagonal() *
                            eig.vectors.adjoint();
  out.psd_root = ((s + s.adjoint()) / Scalar(2)).eval();
  return out;
}

}  // namespace qca

#endif  // QCA_LINALG_HPP
