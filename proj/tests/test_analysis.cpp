// Copyright 2026 The spinorlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "spinorlab/analysis.hpp"
#include "spinorlab/constructors.hpp"
#include "spinorlab/suite.hpp"

using namespace spinorlab;

namespace {

Eigen::MatrixXcd dense_kernel_matrix(const Spinor &psi) {
  const SpinorSpace &s = psi.space();
  Eigen::MatrixXcd k(static_cast<Eigen::Index>(s.dim()), s.n());
  for (int j = 1; j <= s.n(); ++j) k.col(j - 1) = dense_generator_matrix(s, j).matrix * psi.to_eigen();
  return k;
}

/// Brute-force nullity: n minus the rank of the dense kernel matrix,
/// rank taken from Eigen's complete orthogonal decomposition.
int oracle_nullity(const Spinor &psi) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(dense_kernel_matrix(psi));
  cod.setThreshold(1e-9);
  return psi.space().n() - static_cast<int>(cod.rank());
}

std::vector<double> to_std(const Eigen::VectorXd &v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

TEST_CASE("kernel matrix", "[analysis]") {
  const Spinor up = psi_pure(2);
  const Eigen::MatrixXcd k = kernel_matrix(up);
  // columns: e_1 u_+ = i u_-, e_2 u_+ = u_-
  Eigen::MatrixXcd expected(2, 2);
  expected << 0.0, 0.0, kI, 1.0;
  CHECK((k - expected).norm() < 1e-15);

  SeededSampler s(1);
  const Spinor psi = random_spinor(SpinorSpace(7), s);
  const Complex c(0.5, 2.0);
  CHECK((kernel_matrix(c * psi) - c * kernel_matrix(psi)).norm() < 1e-13);
  CHECK((kernel_matrix(psi) - dense_kernel_matrix(psi)).norm() < 1e-13);

  CHECK_THROWS_AS(kernel_matrix(Spinor::zero(SpinorSpace(4))), ZeroSpinorError);
}

TEST_CASE("nullity of the canonical spinors", "[analysis]") {
  for (int n = 2; n <= 12; ++n) {
    const NullityReport r1 = nullity(psi_pure(n));
    CHECK(r1.nullity == n / 2);
    CHECK(r1.rank_gap >= 1e3);
    CHECK(r1.singular_values.size() == static_cast<std::size_t>(n));
    CHECK(std::is_sorted(r1.singular_values.rbegin(), r1.singular_values.rend()));
    CHECK(static_cast<int>(r1.kernel_basis.size()) == r1.nullity);
  }
  for (int n : {2, 6, 7, 8, 9, 10, 11, 12}) {
    const NullityReport r2 = nullity(psi_totally_impure(n));
    CHECK(r2.nullity == 0);
    CHECK(std::isinf(r2.rank_gap));
  }
  // psi2 in dimension 4 lies in one chirality half and is pure (oracle value).
  const Spinor psi2_4 = Spinor::basis(SpinorSpace(4), 0) + Spinor::basis(SpinorSpace(4), 3);
  CHECK(nullity(psi2_4).nullity == 2);
  CHECK(oracle_nullity(psi2_4) == 2);
  CHECK_THROWS_AS(nullity(Spinor::zero(SpinorSpace(5))), ZeroSpinorError);
}

TEST_CASE("nullity agrees with the dense brute force", "[analysis][oracle]") {
  SeededSampler s(99);
  for (int n = 2; n <= 10; ++n) {
    for (int t = 0; t < 20; ++t) {
      const Spinor psi = (t % 2) ? detail::structured_spinor(n, s) : random_spinor(SpinorSpace(n), s);
      const NullityReport rep = nullity(psi);
      INFO("n=" << n << " trial=" << t);
      CHECK(rep.nullity == oracle_nullity(psi));
      // Kernel vectors annihilate psi and are orthonormal.
      for (std::size_t a = 0; a < rep.kernel_basis.size(); ++a) {
        CHECK(apply_vector(rep.kernel_basis[a], psi).norm() <= 1e-10 * psi.norm());
        CHECK(std::abs(rep.kernel_basis[a].norm() - 1.0) < 1e-12);
      }
      CHECK(rep.nullity <= n / 2);
      if (n % 2) CHECK(2 * rep.nullity < n);
    }
  }
}

TEST_CASE("ill-conditioned rank is refused", "[analysis]") {
  // Two perturbation scales straddle the cutoff: singular values
  // ~1.4e-9 (kept) and ~1.4e-11 (dropped), gap ~100.
  const SpinorSpace s(6);
  const Spinor psi = psi_pure(6) + Complex(1e-9) * Spinor::basis(s, 1) +
                     Complex(1e-11) * Spinor::basis(s, 7);
  CHECK_THROWS_AS(nullity(psi), IllConditionedRankError);
  Tolerances loose;
  loose.rank_gap = 1.0;
  CHECK(nullity(psi, loose).nullity == 2);
}

TEST_CASE("classification", "[analysis]") {
  const Classification pure8 = classify(psi_pure(8));
  CHECK(pure8.tag == PurityClass::Pure);
  CHECK(pure8.rank == 4);
  CHECK_FALSE(pure8.impure());

  const Classification ti6 = classify(psi_totally_impure(6));
  CHECK(ti6.tag == PurityClass::TotallyImpure);
  CHECK(ti6.rank == 0);

  const Classification psi1_7 = classify(psi_pure(7));
  CHECK(psi1_7.nullity == 3);
  CHECK(psi1_7.impure());
  CHECK(psi1_7.tag == PurityClass::StrictlyPartiallyPure);

  SeededSampler s(5);
  for (int t = 0; t < 20; ++t) {
    const Classification c = classify(random_spinor(SpinorSpace(5), s));
    CHECK(c.tag == PurityClass::StrictlyPartiallyPure);
    CHECK(c.rank == 2);
    CHECK(c.distribution_dim == 4);
  }
}

TEST_CASE("xi vector", "[analysis]") {
  CHECK(xi_vector(Spinor::zero(SpinorSpace(5))).isZero());
  const Eigen::VectorXd xi = xi_vector(psi_pure(3));
  CHECK((xi - Eigen::Vector3d(0.0, 0.0, 1.0)).norm() < 1e-15);

  SeededSampler s(8);
  for (int n = 3; n <= 9; ++n) {
    const Spinor psi = detail::structured_spinor(n, s);
    const CRFrame f = cr_frame(psi);
    CHECK((f.d_basis.transpose() * f.xi).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("CR frame of psi1 in dimension 4", "[analysis]") {
  const CRFrame f = cr_frame(psi_pure(4));
  CHECK(f.d_basis.cols() == 4);
  CHECK(f.dperp_basis.cols() == 0);
  // Oracle values: J e_1 = -e_2, J e_3 = -e_4.
  CHECK((f.apply_j(Eigen::Vector4d(1, 0, 0, 0)) - Eigen::Vector4d(0, -1, 0, 0)).norm() < 1e-12);
  CHECK((f.apply_j(Eigen::Vector4d(0, 0, 1, 0)) - Eigen::Vector4d(0, 0, 0, -1)).norm() < 1e-12);
}

TEST_CASE("CR frame in dimension 3", "[analysis]") {
  SeededSampler s(21);
  for (int t = 0; t < 50; ++t) {
    const Spinor psi = random_spinor(SpinorSpace(3), s);
    const CRFrame f = cr_frame(psi);
    CHECK(f.d_basis.cols() == 2);
    CHECK(f.dperp_basis.cols() == 1);
    const double len = f.xi.norm();
    CHECK(std::abs(len - 1.0) < 1e-10);
    const Spinor xi_psi = apply_vector(to_std(f.xi / len), psi);
    CHECK((xi_psi + Complex(0.0, len) * psi).norm() < 1e-10);
    // xi spans D^perp.
    CHECK(std::abs(std::abs(f.dperp_basis.col(0).dot(f.xi)) - len) < 1e-10);
  }
}

TEST_CASE("CR frame errors", "[analysis]") {
  CHECK_THROWS_AS(cr_frame(Spinor::zero(SpinorSpace(4))), ZeroSpinorError);
  CHECK_THROWS_AS(cr_frame(psi_totally_impure(6)), EmptyDistributionError);
}

TEST_CASE("strictness identity and J invariants", "[analysis][property]") {
  SeededSampler s(2024);
  const Tolerances tol;
  for (int n = 2; n <= 10; ++n) {
    for (int t = 0; t < 30; ++t) {
      const Spinor psi = (t % 2) ? detail::structured_spinor(n, s) : random_spinor(SpinorSpace(n), s);
      const detail::Outcome o = detail::check_cr_frame(psi, tol);
      INFO("n=" << n << " trial=" << t << " " << o.detail);
      CHECK(o.pass);
    }
  }
}

TEST_CASE("no real vector annihilates a spinor", "[analysis][property]") {
  SeededSampler s(31);
  for (int n = 2; n <= 10; ++n) {
    const Spinor psi = detail::structured_spinor(n, s);
    const Eigen::MatrixXd real_system = detail::realify(kernel_matrix(psi));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(real_system);
    const Eigen::VectorXd sv = svd.singularValues();
    CHECK(sv(sv.size() - 1) > 1e-6 * sv(0));
  }
}

TEST_CASE("scaling invariance", "[analysis][property]") {
  SeededSampler s(41);
  for (int n = 3; n <= 8; ++n) {
    const Spinor psi = detail::structured_spinor(n, s);
    const Complex c = s.complex_gaussian() * 3.0;
    CHECK(classify(c * psi).tag == classify(psi).tag);
    CHECK(classify(c * psi).rank == classify(psi).rank);
    const CRFrame a = cr_frame(psi);
    const CRFrame b = cr_frame(c * psi);
    CHECK(subspace_distance(a.d_basis, b.d_basis) <= 1e-9);
  }
}

TEST_CASE("partial purity of u . psi", "[analysis]") {
  SeededSampler s(51);
  for (int n = 3; n <= 8; ++n) {
    Spinor psi = random_spinor(SpinorSpace(n), s);
    if (n >= 6) psi = tensor_spinor(psi_pure(2), random_spinor(SpinorSpace(n - 2), s));
    const CRFrame f = cr_frame(psi);
    REQUIRE(f.dperp_basis.cols() > 0);
    for (Eigen::Index c = 0; c < f.dperp_basis.cols(); ++c) {
      const PerpCheck pc = perp_multiplication_check(psi, f.dperp_basis.col(c));
      CHECK(pc.partially_pure);
      CHECK(pc.max_defect <= 1e-10);
      CHECK(pc.consistent);
    }
    for (Eigen::Index c = 0; c < f.d_basis.cols(); ++c) {
      const PerpCheck pc = perp_multiplication_check(psi, f.d_basis.col(c));
      CHECK_FALSE(pc.partially_pure);
      CHECK(pc.max_defect >= 1e-3);
      CHECK(pc.consistent);
    }
  }
  // In dimension 3 the characteristic vector spans D^perp.
  const Spinor psi = random_spinor(SpinorSpace(3), s);
  const Eigen::VectorXd xi = xi_vector(psi);
  CHECK(perp_multiplication_check(psi, xi / xi.norm()).partially_pure);

  CHECK_THROWS_AS(perp_multiplication_check(psi, Eigen::Vector3d::Zero()), ZeroVectorError);
  CHECK_THROWS_AS(perp_multiplication_check(Spinor::zero(SpinorSpace(3)), xi), ZeroSpinorError);
}

TEST_CASE("chirality purity and low-dimension ranks", "[analysis][property]") {
  SeededSampler s(61);
  for (int n : {4, 6}) {
    for (Chirality c : {Chirality::Positive, Chirality::Negative}) {
      for (int t = 0; t < 50; ++t) CHECK(nullity(random_chiral_spinor(SpinorSpace(n), s, c)).nullity == n / 2);
    }
  }
  for (int t = 0; t < 100; ++t) {
    CHECK(nullity(random_spinor(SpinorSpace(3), s)).nullity == 1);
    CHECK(nullity(random_spinor(SpinorSpace(4), s)).nullity >= 1);
    CHECK(nullity(random_spinor(SpinorSpace(5), s)).nullity == 2);
  }
}
