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
#include <vector>

#include "spinorlab/clifford.hpp"
#include "spinorlab/constructors.hpp"

using namespace spinorlab;
using Catch::Matchers::WithinAbs;

namespace {

double dist(const Spinor &a, const Spinor &b) { return (a - b).norm(); }

Spinor basis_of(int n, std::vector<int> eps) {
  return Spinor::basis(SpinorSpace(n), eps_to_index(eps));
}

}  // namespace

TEST_CASE("make_space sizes", "[clifford]") {
  CHECK(make_space(6).k() == 3);
  CHECK(make_space(6).dim() == 8);
  CHECK(make_space(2).k() == 1);
  CHECK(make_space(2).dim() == 2);
  CHECK(make_space(7).k() == 3);
  CHECK(make_space(7).dim() == 8);
  CHECK(make_space(7).odd());
  CHECK_THROWS_AS(make_space(1), DimensionError);
  CHECK_THROWS_AS(make_space(0), DimensionError);
}

TEST_CASE("basis index convention", "[clifford]") {
  CHECK(eps_to_index(std::vector<int>{1, 1, 1}) == 0);
  CHECK(eps_to_index(std::vector<int>{-1, -1, -1}) == 7);
  CHECK(eps_to_index(std::vector<int>{1, -1}) == 1);
  CHECK(eps_to_index(std::vector<int>{-1, 1}) == 2);
  CHECK_THROWS_AS(eps_to_index(std::vector<int>{1, 0}), RangeError);
  CHECK_THROWS_AS(eps_to_index(std::vector<int>{}), RangeError);
  CHECK_THROWS_AS(index_to_eps(make_space(6), 8), RangeError);

  for (int n : {2, 5, 8}) {
    const SpinorSpace s(n);
    for (std::size_t i = 0; i < s.dim(); ++i) CHECK(eps_to_index(index_to_eps(s, i)) == i);
  }
}

TEST_CASE("spinor construction validates", "[clifford]") {
  CHECK_THROWS_AS(Spinor(SpinorSpace(4), std::vector<Complex>(3)), DimensionError);
  CHECK_THROWS_AS(Spinor(SpinorSpace(2), {Complex(NAN, 0), 0.0}), RangeError);
  CHECK_THROWS_AS(ComplexVector(SpinorSpace(3), std::vector<Complex>(2)), DimensionError);
}

TEST_CASE("generator action on basis spinors", "[clifford]") {
  // e_1 u_{+1} = i u_{-1}, e_2 u_{+1} = u_{-1}, e_2 u_{-1} = -u_{+1}
  const Spinor up = basis_of(2, {1});
  const Spinor um = basis_of(2, {-1});
  CHECK(dist(apply_generator(1, up), kI * um) < 1e-15);
  CHECK(dist(apply_generator(1, um), kI * up) < 1e-15);
  CHECK(dist(apply_generator(2, up), um) < 1e-15);
  CHECK(dist(apply_generator(2, um), Complex(-1.0) * up) < 1e-15);

  // Odd generator: e_3 u_{+1} = i (-1)^1 u_{+1} = -i u_{+1} in dimension 3.
  CHECK(dist(apply_generator(3, basis_of(3, {1})), -kI * basis_of(3, {1})) < 1e-15);

  // e_3 in dimension 4 flips eps_1 and picks up i (-1) eps_2.
  CHECK(dist(apply_generator(3, basis_of(4, {1, -1})), kI * basis_of(4, {-1, -1})) < 1e-15);

  CHECK_THROWS_AS(apply_generator(0, up), RangeError);
  CHECK_THROWS_AS(apply_generator(3, up), RangeError);
}

TEST_CASE("dense oracle matches the 2x2 building blocks", "[clifford][oracle]") {
  // In the u-basis g1 and g2 become [[0, i], [i, 0]] and [[0, -1], [1, 0]];
  // conjugating back to the standard basis recovers diag(i, -i) and antidiag(i, i).
  const SpinorSpace s(2);
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd u(2, 2);
  u << r, r, -kI * r, kI * r;
  const Eigen::MatrixXcd g1 = u * dense_generator_matrix(s, 1).matrix * u.adjoint();
  const Eigen::MatrixXcd g2 = u * dense_generator_matrix(s, 2).matrix * u.adjoint();
  Eigen::MatrixXcd g1_expected(2, 2), g2_expected(2, 2);
  g1_expected << kI, 0.0, 0.0, -kI;
  g2_expected << 0.0, kI, kI, 0.0;
  CHECK((g1 - g1_expected).norm() < 1e-15);
  CHECK((g2 - g2_expected).norm() < 1e-15);

  for (int n = 2; n <= 7; ++n) {
    const SpinorSpace sp(n);
    const auto d = static_cast<Eigen::Index>(sp.dim());
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    for (int j = 1; j <= n; ++j) {
      const Eigen::MatrixXcd m = dense_generator_matrix(sp, j).matrix;
      CHECK((m.adjoint() * m - id).norm() < 1e-13);
      CHECK((m * m + id).norm() < 1e-13);
    }
  }
  CHECK_THROWS_AS(dense_generator_matrix(s, 3), RangeError);
}

TEST_CASE("matrix-free generators agree with the dense oracle", "[clifford][oracle]") {
  SeededSampler sampler(7);
  for (int n = 2; n <= 10; ++n) {
    const SpinorSpace s(n);
    std::vector<DenseOperator> dense;
    for (int j = 1; j <= n; ++j) dense.push_back(dense_generator_matrix(s, j));
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Spinor psi = random_spinor(s, sampler);
      for (int j = 1; j <= n; ++j) {
        const Spinor a = apply_generator(j, psi);
        worst = std::max(worst, dist(a, dense[static_cast<std::size_t>(j - 1)].apply(psi)) / psi.norm());
      }
    }
    INFO("n = " << n);
    CHECK(worst <= 1e-13);
  }
}

TEST_CASE("Clifford relations and isometry", "[clifford][property]") {
  SeededSampler sampler(11);
  for (int n = 2; n <= 10; ++n) {
    const SpinorSpace s(n);
    for (int t = 0; t < 10; ++t) {
      const Spinor psi = random_spinor(s, sampler);
      for (int j = 1; j <= n; ++j) {
        const Spinor ej = apply_generator(j, psi);
        CHECK_THAT(ej.norm(), WithinAbs(psi.norm(), 1e-13));
        for (int l = 1; l <= n; ++l) {
          Spinor sum = apply_generator(j, apply_generator(l, psi)) + apply_generator(l, ej);
          if (j == l) sum += Complex(2.0) * psi;
          CHECK(sum.norm() <= 1e-12 * psi.norm());
        }
      }
    }
  }
}

TEST_CASE("vector action", "[clifford]") {
  SeededSampler sampler(3);
  const SpinorSpace s(5);
  const Spinor psi = random_spinor(s, sampler);

  const ComplexVector zero(s, std::vector<Complex>(5));
  CHECK(apply_vector(zero, psi).norm() == 0.0);

  const Eigen::VectorXd x = random_unit_vector(5, sampler) * 1.7;
  const std::vector<double> xv(x.data(), x.data() + 5);
  const Spinor xx = apply_vector(xv, apply_vector(xv, psi));
  CHECK(dist(xx, Complex(-x.squaredNorm()) * psi) < 1e-12);

  // Complex linearity in the vector.
  const ComplexVector a(s, {1.0, kI, 0.5, 0.0, -2.0});
  const ComplexVector b(s, {0.0, 2.0, kI, 1.0, 0.0});
  std::vector<Complex> ab(5);
  for (std::size_t i = 0; i < 5; ++i) ab[i] = Complex(2.0, 1.0) * a[i] + b[i];
  const Spinor lhs = apply_vector(ComplexVector(s, ab), psi);
  const Spinor rhs = Complex(2.0, 1.0) * apply_vector(a, psi) + apply_vector(b, psi);
  CHECK(dist(lhs, rhs) < 1e-13);

  // e_1 - i e_2 annihilates u_{+1,+1}; e_1 + i e_2 does not.
  const Spinor u0 = basis_of(4, {1, 1});
  const SpinorSpace s4(4);
  CHECK(apply_vector(ComplexVector(s4, {1.0, -kI, 0.0, 0.0}), u0).norm() < 1e-15);
  CHECK_THAT(apply_vector(ComplexVector(s4, {1.0, kI, 0.0, 0.0}), u0).norm(), WithinAbs(2.0, 1e-15));

  CHECK_THROWS_AS(apply_vector(ComplexVector(SpinorSpace(4), std::vector<Complex>(4)), psi),
                  DimensionError);
}

TEST_CASE("Hermitian product", "[clifford]") {
  const SpinorSpace s(6);
  for (std::size_t a = 0; a < s.dim(); ++a) {
    for (std::size_t b = 0; b < s.dim(); ++b) {
      CHECK(inner(Spinor::basis(s, a), Spinor::basis(s, b)) == Complex(a == b ? 1.0 : 0.0));
    }
  }
  const Spinor psi2 = psi_totally_impure(6);
  CHECK(inner(psi2, psi2) == Complex(2.0));

  SeededSampler sampler(5);
  const Spinor phi = random_spinor(s, sampler);
  const Spinor psi = random_spinor(s, sampler);
  // Linear in the first slot, conjugate-linear in the second.
  const Complex c(0.3, -1.2);
  CHECK(std::abs(inner(c * phi, psi) - c * inner(phi, psi)) < 1e-15);
  CHECK(std::abs(inner(phi, c * psi) - std::conj(c) * inner(phi, psi)) < 1e-15);

  for (int n = 2; n <= 6; ++n) {
    const SpinorSpace sp(n);
    const Spinor f = random_spinor(sp, sampler);
    const Spinor g = random_spinor(sp, sampler);
    for (int j = 1; j <= n; ++j) {
      CHECK(std::abs(inner(apply_generator(j, f), g) + inner(f, apply_generator(j, g))) < 1e-13);
    }
    const Eigen::VectorXd v = random_unit_vector(n, sampler);
    const std::vector<double> vv(v.data(), v.data() + n);
    CHECK(std::abs(inner(apply_vector(vv, f), g) + inner(f, apply_vector(vv, g))) < 1e-12);
  }
  CHECK_THROWS_AS(inner(phi, random_spinor(SpinorSpace(4), sampler)), DimensionError);
}

TEST_CASE("volume element", "[clifford]") {
  SeededSampler sampler(13);
  for (int n : {3, 5, 7}) {
    const Spinor psi = random_spinor(SpinorSpace(n), sampler);
    CHECK(dist(volume_element(psi), psi) < 1e-13);
  }
  for (int n = 2; n <= 10; ++n) {
    const Spinor psi = random_spinor(SpinorSpace(n), sampler);
    CHECK(dist(volume_element(volume_element(psi)), psi) < 1e-13);
  }
  // Densely: omega commutes with every e_j for odd n, anticommutes for even n.
  for (int n = 2; n <= 7; ++n) {
    const SpinorSpace s(n);
    const auto d = static_cast<Eigen::Index>(s.dim());
    Eigen::MatrixXcd omega = volume_phase(s) * Eigen::MatrixXcd::Identity(d, d);
    for (int j = 1; j <= n; ++j) omega = omega * dense_generator_matrix(s, j).matrix;
    CHECK((omega * omega - Eigen::MatrixXcd::Identity(d, d)).norm() < 1e-13);
    for (int j = 1; j <= n; ++j) {
      const Eigen::MatrixXcd e = dense_generator_matrix(s, j).matrix;
      const double sign = s.odd() ? -1.0 : 1.0;
      CHECK((omega * e + sign * e * omega).norm() < 1e-13);
    }
    // Matrix-free and dense agree.
    const Spinor psi = random_spinor(s, sampler);
    CHECK((volume_element(psi).to_eigen() - omega * psi.to_eigen()).norm() < 1e-13);
  }
  // All-plus spinor is positive in dimension 4.
  CHECK(dist(volume_element(basis_of(4, {1, 1})), basis_of(4, {1, 1})) < 1e-15);
}

TEST_CASE("chirality projections", "[clifford]") {
  SeededSampler sampler(17);
  for (int n : {2, 4, 6, 8}) {
    const Spinor psi = random_spinor(SpinorSpace(n), sampler);
    const Spinor p = chirality_project(psi, Chirality::Positive);
    const Spinor m = chirality_project(psi, Chirality::Negative);
    CHECK(dist(p + m, psi) < 1e-14);
    CHECK(chirality_project(m, Chirality::Positive).norm() < 1e-14);
    CHECK(dist(chirality_project(p, Chirality::Positive), p) < 1e-14);
    CHECK(std::abs(inner(p, m)) < 1e-14);
  }
  const Spinor u0 = basis_of(4, {1, 1});
  CHECK(dist(chirality_project(u0, Chirality::Positive), u0) < 1e-15);
  CHECK(chirality_project(u0, Chirality::Negative).norm() < 1e-15);
  CHECK_THROWS_AS(chirality_project(basis_of(5, {1, 1}), Chirality::Positive), ParityError);
}
