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

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "qca/linalg.hpp"
#include "qca/povm.hpp"
#include "test_util.hpp"

using qca::MatrixC;
using qca::max_abs;
using qca_test::random_complex_matrix;
using qca_test::random_hermitian;
using qca_test::random_psd;
using qca_test::random_unitary;

namespace {

MatrixC identity(int n) { return MatrixC::Identity(n, n); }

MatrixC diag2(double a, double b) {
  MatrixC m = MatrixC::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("hermitian_eig: identity and diagonal cases") {
  const auto eig_id = qca::hermitian_eig(identity(2));
  CHECK(eig_id.values(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig_id.values(1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(max_abs((eig_id.vectors.adjoint() * eig_id.vectors - identity(2)).eval()) <=
        1e-10);

  const auto eig_diag = qca::hermitian_eig(diag2(3.0, -1.0));
  CHECK(eig_diag.values(0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(eig_diag.values(1) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(eig_diag.vectors(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(eig_diag.vectors(1, 1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig: detection operator matrix at w=0.6, mu=0.5, delta=1") {
  // (1+mu^2-2*mu*w) = 0.65 on the diagonal, ((1+mu^2)*w-2*mu) = -0.25 off it.
  MatrixC m(2, 2);
  m(0, 0) = 0.65;
  m(0, 1) = -0.25;
  m(1, 0) = -0.25;
  m(1, 1) = 0.65;
  const auto eig = qca::hermitian_eig(m);
  // Closed form (1-w)(1+mu)^2 = 0.4 * 2.25.
  CHECK(eig.values(0) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(eig.values(1) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("hermitian_eig: reconstruction and orthonormality over random input") {
  qca::RandomStream rng(101);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng.raw() % 7);  // dims 2..8
    const MatrixC m = random_hermitian(rng, n);
    const auto eig = qca::hermitian_eig(m);

    CHECK(max_abs((eig.reconstruct() - m).eval()) <= 1e-10);
    CHECK(max_abs((eig.vectors.adjoint() * eig.vectors - identity(n)).eval()) <= 1e-10);
    for (Eigen::Index i = 0; i + 1 < eig.values.size(); ++i) {
      CHECK(eig.values(i) >= eig.values(i + 1));
    }

    // Independent oracle: Eigen's self-adjoint solver.
    Eigen::SelfAdjointEigenSolver<MatrixC> oracle(m);
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
      CHECK(eig.values(i) ==
            doctest::Approx(oracle.eigenvalues()(n - 1 - i)).epsilon(1e-11));
    }
  }
}

TEST_CASE("hermitian_eig: dimension 1 works") {
  MatrixC m(1, 1);
  m(0, 0) = -2.5;
  const auto eig = qca::hermitian_eig(m);
  CHECK(eig.values(0) == doctest::Approx(-2.5));
  CHECK(std::abs(eig.vectors(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig: rejects non-Hermitian input") {
  MatrixC m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(qca::hermitian_eig(m), qca::NotHermitianError);
}

TEST_CASE("hermitian_eig: rejects non-finite input") {
  MatrixC m = identity(2);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(qca::hermitian_eig(m), qca::ValidationError);
}

TEST_CASE("hermitian_eig: raises NoConvergence when the sweep budget is zero") {
  qca::Tolerances tol;
  tol.jacobi_max_sweeps = 0;
  MatrixC m(2, 2);
  m << 1.0, 0.5, 0.5, 1.0;
  CHECK_THROWS_AS(qca::hermitian_eig(m, tol), qca::NoConvergenceError);
}

TEST_CASE("hermitian_eig: bit-identical across repeated runs") {
  qca::RandomStream rng(707);
  const MatrixC m = random_hermitian(rng, 5);
  const auto a = qca::hermitian_eig(m);
  const auto b = qca::hermitian_eig(m);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);
}

TEST_CASE("psd_sqrt: trivial cases") {
  CHECK(max_abs((qca::psd_sqrt(identity(2)) - identity(2)).eval()) <= 1e-12);
  const MatrixC r = qca::psd_sqrt(diag2(4.0, 0.0));
  CHECK(max_abs((r - diag2(2.0, 0.0)).eval()) <= 1e-12);
}

TEST_CASE("psd_sqrt: squaring oracle on a POVM element") {
  const auto povm = qca::build_povm(0.6, 0.5);
  const MatrixC r = qca::psd_sqrt(povm.a_u);
  CHECK(max_abs((r * r - povm.a_u).eval()) <= 1e-9);
  CHECK(max_abs((r - r.adjoint()).eval()) <= 1e-12);
}

TEST_CASE("psd_sqrt: squaring property over 1000 random PSD matrices") {
  qca::RandomStream rng(202);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.raw() % 3);  // dims 2..4
    const MatrixC m = random_psd(rng, n);
    const MatrixC r = qca::psd_sqrt(m);
    CHECK(max_abs((r * r - m).eval()) <= 1e-9);
    CHECK(qca::is_psd(r, 1e-9));
  }
}

TEST_CASE("psd_sqrt: rejects indefinite input") {
  CHECK_THROWS_AS(qca::psd_sqrt(diag2(1.0, -1.0)), qca::NotPsdError);
}

TEST_CASE("psd_sqrt: clamps tiny negative eigenvalues") {
  const MatrixC m = diag2(1.0, -5e-11);
  const MatrixC r = qca::psd_sqrt(m);
  CHECK(std::real(r(1, 1)) == 0.0);
}

TEST_CASE("polar_decompose: a unitary factors as (U, I)") {
  qca::RandomStream rng(303);
  const MatrixC u = random_unitary(rng, 3);
  const auto polar = qca::polar_decompose(u);
  CHECK(max_abs((polar.psd_root - identity(3)).eval()) <= 1e-9);
  CHECK(max_abs((polar.unitary - u).eval()) <= 1e-9);
}

TEST_CASE("polar_decompose: a PSD matrix factors as (I, S)") {
  const auto polar = qca::polar_decompose(diag2(2.0, 3.0));
  CHECK(max_abs((polar.unitary - identity(2)).eval()) <= 1e-9);
  CHECK(max_abs((polar.psd_root - diag2(2.0, 3.0)).eval()) <= 1e-9);
}

TEST_CASE("polar_decompose: reconstruction oracle on random matrices") {
  qca::RandomStream rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.raw() % 5);  // dims 2..6
    const MatrixC k = random_complex_matrix(rng, n);
    const auto polar = qca::polar_decompose(k);
    CHECK(max_abs((polar.unitary * polar.psd_root - k).eval()) <= 1e-9);
    CHECK(qca::is_unitary(polar.unitary, 1e-9));
    CHECK(max_abs((polar.psd_root * polar.psd_root - k.adjoint() * k).eval()) <= 1e-9);
    const auto root_eig = qca::hermitian_eig(polar.psd_root);
    CHECK(root_eig.values(root_eig.values.size() - 1) >= -1e-12);
  }
}

TEST_CASE("polar_decompose: rank-deficient and zero input") {
  const auto polar = qca::polar_decompose(diag2(2.0, 0.0));
  CHECK(qca::is_unitary(polar.unitary, 1e-10));
  CHECK(max_abs((polar.unitary * polar.psd_root - diag2(2.0, 0.0)).eval()) <= 1e-9);

  qca::RandomStream rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    // Rank-1 outer product in dims 2..4.
    const int n = 2 + static_cast<int>(rng.raw() % 3);
    const qca::VectorC a = qca_test::random_state(rng, n);
    const qca::VectorC b = qca_test::random_state(rng, n);
    const MatrixC k = (a * b.adjoint()).eval();
    const auto p = qca::polar_decompose(k);
    CHECK(qca::is_unitary(p.unitary, 1e-9));
    CHECK(max_abs((p.unitary * p.psd_root - k).eval()) <= 1e-9);
  }

  const auto zero = qca::polar_decompose(MatrixC::Zero(3, 3).eval());
  CHECK(qca::is_unitary(zero.unitary, 1e-12));
  CHECK(max_abs(zero.psd_root) <= 1e-12);
}

TEST_CASE("is_unitary: examples") {
  CHECK(qca::is_unitary(identity(2), 1e-12));
  CHECK_FALSE(qca::is_unitary((2.0 * identity(2)).eval(), 1e-12));
}

TEST_CASE("is_psd: examples") {
  CHECK_FALSE(qca::is_psd((-identity(2)).eval(), 1e-10));
  CHECK(qca::is_psd(identity(2), 1e-10));
  qca::RandomStream rng(1);
  CHECK_FALSE(qca::is_psd(random_complex_matrix(rng, 2), 1e-10));
}

TEST_CASE("is_psd: inconclusive element positivity tracks the constraint") {
  // At mu = w (unambiguous regime) the constraint holds strictly.
  const auto povm_ok = qca::build_povm(0.6, 0.6);
  CHECK(qca::is_psd(povm_ok.a_inconclusive, 1e-10));

  // mu = 0.2 violates 2*mu/(1+mu^2) >= w at w = 0.6; with the nominal delta
  // the inconclusive element picks up a negative eigenvalue.
  const double w = 0.6;
  const double mu = 0.2;
  const double delta = (1 - w) * (1 + mu) * (1 + mu);
  const auto povm_bad = qca::build_povm_with_delta(w, mu, delta);
  CHECK_FALSE(qca::is_psd(povm_bad.a_inconclusive, 1e-10));
  const auto eig = qca::hermitian_eig(povm_bad.a_inconclusive);
  CHECK(eig.values(eig.values.size() - 1) < 0.0);
}
