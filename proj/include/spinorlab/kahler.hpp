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

// Clifford action of the Kaehler form of an orthogonal complex structure J on
// R^{2m}:
//
//   alpha . psi = -1/2 sum_{j=1}^{2m} e_j . (J e_j) . psi
//
// The sum runs over the whole frame. With this normalization the spectrum is
// { i(m - 2r) : r = 0..m } with multiplicity binomial(m, r), which is checked
// on every decomposition. Level r is Sigma_r. Multiplication by
// Z = X - iJX in T_{1,0} maps Sigma_r to Sigma_{r+1}, by its conjugate to
// Sigma_{r-1}.
//
// For the standard J, alpha u_eps = -i (sum eps) u_eps, so u_{+1,..,+1} sits
// in the top level r = m.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinorlab/clifford.hpp"
#include "spinorlab/errors.hpp"

namespace spinorlab {

class ComplexStructureMatrix {
 public:
  /// Validates J^2 = -Id and J^T J = Id to `tol`.
  explicit ComplexStructureMatrix(Eigen::MatrixXd matrix, double tol = 1e-12)
      : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 2 || matrix_.rows() % 2 != 0) {
      throw DimensionError("complex structure must be a square matrix of even size >= 2");
    }
    const Eigen::Index d = matrix_.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
    if ((matrix_ * matrix_ + id).norm() > tol) {
      throw ComplexStructureError("J^2 != -Id");
    }
    if ((matrix_.transpose() * matrix_ - id).norm() > tol) {
      throw ComplexStructureError("J is not orthogonal");
    }
  }

  int m() const noexcept { return static_cast<int>(matrix_.rows()) / 2; }
  const Eigen::MatrixXd &matrix() const noexcept { return matrix_; }

 private:
  Eigen::MatrixXd matrix_;
};

/// J e_{2a-1} = e_{2a}, J e_{2a} = -e_{2a-1}.
inline ComplexStructureMatrix standard_j(int m) {
  if (m < 1) throw RangeError("complex dimension must be >= 1");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (int a = 0; a < m; ++a) {
    j(2 * a + 1, 2 * a) = 1.0;
    j(2 * a, 2 * a + 1) = -1.0;
  }
  return ComplexStructureMatrix(std::move(j));
}

namespace detail {

inline void require_matching_structure(const ComplexStructureMatrix &j, const SpinorSpace &s) {
  if (s.odd()) {
    throw ParityError("the Kaehler form acts only for even n, got n=" + std::to_string(s.n()));
  }
  if (s.n() != 2 * j.m()) {
    throw DimensionError("complex structure is for n=" + std::to_string(2 * j.m()) +
                         ", spinor is over n=" + std::to_string(s.n()));
  }
}

}  // namespace detail

inline Spinor alpha_apply(const ComplexStructureMatrix &j, const Spinor &psi) {
  detail::require_matching_structure(j, psi.space());
  const int n = psi.space().n();
  Spinor out = Spinor::zero(psi.space());
  for (int c = 1; c <= n; ++c) {
    const Eigen::VectorXd col = j.matrix().col(c - 1);
    const std::vector<double> je(col.data(), col.data() + n);
    out += apply_generator(c, apply_vector(je, psi));
  }
  return out * Complex(-0.5);
}

/// Dense matrix of the alpha action, assembled column by column through the
/// matrix-free path.
inline Eigen::MatrixXcd alpha_matrix(const ComplexStructureMatrix &j) {
  const SpinorSpace space(2 * j.m());
  const auto dim = static_cast<Eigen::Index>(space.dim());
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    a.col(c) = alpha_apply(j, Spinor::basis(space, static_cast<std::size_t>(c))).to_eigen();
  }
  return a;
}

struct KaehlerLevel {
  int r = 0;
  Complex eigenvalue;            // i(m - 2r)
  int multiplicity = 0;
  std::vector<Spinor> basis;     // orthonormal
  double max_residual = 0.0;     // largest |lambda_computed - i(m - 2r)|
};

struct KaehlerSpectrum {
  int m = 0;
  std::vector<KaehlerLevel> levels;  // indexed by r

  const KaehlerLevel &level(int r) const {
    if (r < 0 || r > m) {
      throw RangeError("level " + std::to_string(r) + " outside 0.." + std::to_string(m));
    }
    return levels[static_cast<std::size_t>(r)];
  }
};

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return b;
}

/// Eigendecomposition of alpha. alpha is skew-Hermitian, so -i alpha is
/// Hermitian with real eigenvalues m - 2r.
inline KaehlerSpectrum kaehler_spectrum(const ComplexStructureMatrix &j, double tol = 1e-9) {
  const int m = j.m();
  const SpinorSpace space(2 * m);
  const Eigen::MatrixXcd h = -kI * alpha_matrix(j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  if (eig.info() != Eigen::Success) throw SpectrumMismatchError("eigensolver did not converge");

  KaehlerSpectrum spec;
  spec.m = m;
  spec.levels.resize(static_cast<std::size_t>(m + 1));
  for (int r = 0; r <= m; ++r) {
    auto &lvl = spec.levels[static_cast<std::size_t>(r)];
    lvl.r = r;
    lvl.eigenvalue = Complex(0.0, m - 2 * r);
  }
  const Eigen::VectorXd &vals = eig.eigenvalues();
  for (Eigen::Index c = 0; c < vals.size(); ++c) {
    const double mu = vals(c);
    const long r = std::lround((m - mu) / 2.0);
    const double residual = std::abs(mu - static_cast<double>(m - 2 * r));
    if (r < 0 || r > m || residual > tol) {
      throw SpectrumMismatchError("eigenvalue " + std::to_string(mu) +
                                  "i is not on the lattice i(m - 2r), m=" + std::to_string(m));
    }
    auto &lvl = spec.levels[static_cast<std::size_t>(r)];
    lvl.basis.push_back(Spinor::from_eigen(space, eig.eigenvectors().col(c)));
    lvl.multiplicity += 1;
    lvl.max_residual = std::max(lvl.max_residual, residual);
  }
  for (const auto &lvl : spec.levels) {
    if (static_cast<std::uint64_t>(lvl.multiplicity) != binomial(m, lvl.r)) {
      throw SpectrumMismatchError("level r=" + std::to_string(lvl.r) + " has multiplicity " +
                                  std::to_string(lvl.multiplicity) + ", expected " +
                                  std::to_string(binomial(m, lvl.r)));
    }
  }
  return spec;
}

inline Spinor project_sigma_r(const KaehlerSpectrum &spec, const Spinor &psi, int r) {
  const KaehlerLevel &lvl = spec.level(r);
  if (psi.space().n() != 2 * spec.m) {
    throw DimensionError("spinor is not over n=" + std::to_string(2 * spec.m));
  }
  Spinor out = Spinor::zero(psi.space());
  for (const Spinor &b : lvl.basis) out += b * inner(psi, b);
  return out;
}

/// Norm of the part of `phi` lying outside level `target` (all of it when
/// target is outside 0..m).
inline double off_level_norm(const KaehlerSpectrum &spec, const Spinor &phi, int target) {
  double s = 0.0;
  for (int r = 0; r <= spec.m; ++r) {
    if (r == target) continue;
    s += project_sigma_r(spec, phi, r).squared_norm();
  }
  return std::sqrt(s);
}

namespace detail {

inline ComplexVector type_vector(const ComplexStructureMatrix &j, const Eigen::VectorXd &x,
                                 double imag_sign) {
  const int n = 2 * j.m();
  if (x.size() != n) throw DimensionError("vector length does not match the complex structure");
  if (x.norm() == 0.0) throw ZeroVectorError("X must be nonzero");
  const Eigen::VectorXd jx = j.matrix() * x;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = Complex(x(i), imag_sign * jx(i));
  return ComplexVector(SpinorSpace(n), std::move(z));
}

inline void require_level(const KaehlerSpectrum &spec, const Spinor &psi, int r) {
  (void)spec.level(r);
  const double nrm = psi.norm();
  if (off_level_norm(spec, psi, r) > 1e-8 * nrm) {
    throw RangeError("spinor does not lie in level r=" + std::to_string(r));
  }
}

}  // namespace detail

/// Z = X - iJX. Returns the norm of the components of Z . psi_r outside level
/// r+1; for r = m that is |Z . psi_m| itself.
inline double raising_defect(const KaehlerSpectrum &spec, const ComplexStructureMatrix &j,
                             const Eigen::VectorXd &x, const Spinor &psi_r, int r) {
  detail::require_level(spec, psi_r, r);
  const Spinor phi = apply_vector(detail::type_vector(j, x, -1.0), psi_r);
  return off_level_norm(spec, phi, r + 1);
}

/// Conjugate direction X + iJX, which lowers the level by one.
inline double lowering_defect(const KaehlerSpectrum &spec, const ComplexStructureMatrix &j,
                              const Eigen::VectorXd &x, const Spinor &psi_r, int r) {
  detail::require_level(spec, psi_r, r);
  const Spinor phi = apply_vector(detail::type_vector(j, x, 1.0), psi_r);
  return off_level_norm(spec, phi, r - 1);
}

}  // namespace spinorlab
