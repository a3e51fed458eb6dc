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

// Isotropic kernel, nullity, purity classes and the pointwise almost-CR data
// (D, J, D^perp, xi) carried by a spinor.
//
// For psi != 0 the isotropic kernel is T_psi = { Z in C^n : Z . psi = 0 },
// the null space of the 2^k x n matrix whose j-th column is e_j . psi. Its
// complex dimension is the nullity N_psi.
//
// The real distribution
//
//   D = { X in R^n : X . psi = i Y . psi for some real Y } u {0}
//
// coincides with Re T_psi + Im T_psi: if X . psi = i Y . psi then
// Z = X - iY lies in T_psi, and conversely every Z = X + iW in T_psi gives
// X . psi = i (-W) . psi. No nonzero real vector annihilates psi (real X
// satisfies X . X . psi = -|X|^2 psi), so Y is unique and JX := -Y is well
// defined. Hence D is read off from the kernel basis, and T_psi consists of
// the vectors X + iJX.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinorlab/clifford.hpp"
#include "spinorlab/errors.hpp"

namespace spinorlab {

/// Numerical thresholds. Defaults are the library-wide contract; callers may
/// override any of them.
struct Tolerances {
  double rank = 1e-10;            // singular values below rank * sigma_max are zero
  double rank_gap = 1e3;          // minimal retained/discarded singular value ratio
  double j_residual = 1e-10;      // least-squares residual when solving for JX
  double xi_imaginary = 1e-12;    // allowed imaginary residue of xi, relative to |psi|^2
  double perp_defect = 1e-10;     // partial-purity defect of u . psi
  double d_membership = 1e-8;     // |P_D u| / |u| below this counts as u in D^perp
};

struct NullityReport {
  int nullity = 0;
  std::vector<ComplexVector> kernel_basis;   // orthonormal basis of T_psi
  std::vector<double> singular_values;       // n entries, descending
  double rank_gap = std::numeric_limits<double>::infinity();
};

enum class PurityClass { Pure, StrictlyPartiallyPure, TotallyImpure, Impure };

inline const char *to_string(PurityClass c) {
  switch (c) {
    case PurityClass::Pure: return "Pure";
    case PurityClass::StrictlyPartiallyPure: return "StrictlyPartiallyPure";
    case PurityClass::TotallyImpure: return "TotallyImpure";
    case PurityClass::Impure: return "Impure";
  }
  return "?";
}

/// Purity class of a spinor. `tag` is Impure only when 0 < N < n/2 and the
/// real distribution fails to have dimension 2N; `impure()` is the plain
/// N < n/2 predicate.
struct Classification {
  PurityClass tag = PurityClass::TotallyImpure;
  int rank = 0;
  int nullity = 0;
  int n = 0;
  int distribution_dim = 0;

  bool impure() const noexcept { return 2 * nullity < n; }
};

struct CRFrame {
  Eigen::MatrixXd d_basis;      // n x 2m, orthonormal columns spanning D
  Eigen::MatrixXd j_matrix;     // 2m x 2m, J in the d_basis
  Eigen::MatrixXd dperp_basis;  // n x (n - 2m), orthonormal columns
  Eigen::VectorXd xi;           // characteristic vector
  int nullity = 0;
  double j_residual = 0.0;      // largest relative residual of X . psi = i Y . psi
  int real_system_rank = 0;     // rank of Y -> i Y . psi over the reals

  int rank() const noexcept { return static_cast<int>(d_basis.cols()) / 2; }

  /// J applied to a vector of R^n lying in D.
  Eigen::VectorXd apply_j(const Eigen::VectorXd &x) const {
    return d_basis * (j_matrix * (d_basis.transpose() * x));
  }
};

namespace detail {

inline void require_nonzero(const Spinor &psi) {
  if (psi.is_zero()) throw ZeroSpinorError("spinor is zero");
}

/// Orthonormal basis of the column span of `m` and of its orthogonal
/// complement, using the same relative cutoff as the nullity computation.
inline std::pair<Eigen::MatrixXd, Eigen::MatrixXd> split_column_span(
    const Eigen::MatrixXd &m, double rel_tol) {
  const Eigen::Index rows = m.rows();
  if (m.cols() == 0) return {Eigen::MatrixXd(rows, 0), Eigen::MatrixXd::Identity(rows, rows)};
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
  const Eigen::VectorXd &sv = svd.singularValues();
  Eigen::Index r = 0;
  const double cut = rel_tol * (sv.size() > 0 ? sv(0) : 0.0);
  while (r < sv.size() && sv(r) > cut) ++r;
  const Eigen::MatrixXd &u = svd.matrixU();
  return {u.leftCols(r), u.rightCols(rows - r)};
}

inline Eigen::MatrixXd realify(const Eigen::MatrixXcd &m) {
  Eigen::MatrixXd out(2 * m.rows(), m.cols());
  out.topRows(m.rows()) = m.real();
  out.bottomRows(m.rows()) = m.imag();
  return out;
}

inline Eigen::VectorXd realify(const Eigen::VectorXcd &v) {
  Eigen::VectorXd out(2 * v.size());
  out.head(v.size()) = v.real();
  out.tail(v.size()) = v.imag();
  return out;
}

}  // namespace detail

/// The linear map Z -> Z . psi as a 2^k x n matrix; column j is e_{j+1} . psi.
inline Eigen::MatrixXcd kernel_matrix(const Spinor &psi) {
  detail::require_nonzero(psi);
  const int n = psi.space().n();
  Eigen::MatrixXcd k(static_cast<Eigen::Index>(psi.size()), n);
  for (int j = 1; j <= n; ++j) k.col(j - 1) = apply_generator(j, psi).to_eigen();
  return k;
}

inline NullityReport nullity(const Spinor &psi, const Tolerances &tol = {}) {
  const Eigen::MatrixXcd k = kernel_matrix(psi);
  const int n = psi.space().n();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k, Eigen::ComputeFullV);

  NullityReport report;
  report.singular_values.assign(static_cast<std::size_t>(n), 0.0);
  const Eigen::VectorXd &sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    report.singular_values[static_cast<std::size_t>(i)] = sv(i);
  }
  const double sigma_max = report.singular_values.front();
  const double cut = tol.rank * sigma_max;
  const int nul = static_cast<int>(std::count_if(
      report.singular_values.begin(), report.singular_values.end(),
      [cut](double s) { return s < cut; }));
  report.nullity = nul;

  if (nul > 0) {
    const double retained = report.singular_values[static_cast<std::size_t>(n - nul - 1)];
    const double discarded = report.singular_values[static_cast<std::size_t>(n - nul)];
    report.rank_gap = discarded == 0.0 ? std::numeric_limits<double>::infinity()
                                       : retained / discarded;
  }
  if (report.rank_gap < tol.rank_gap) {
    throw IllConditionedRankError(
        "numerical rank is ambiguous: gap " + std::to_string(report.rank_gap) +
        " between retained and discarded singular values is below " +
        std::to_string(tol.rank_gap));
  }

  const Eigen::MatrixXcd &v = svd.matrixV();
  for (int c = n - nul; c < n; ++c) {
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) z[static_cast<std::size_t>(r)] = v(r, c);
    report.kernel_basis.emplace_back(psi.space(), std::move(z));
  }
  return report;
}

/// Real n x 2N matrix [Re Z_1, Im Z_1, ..., Re Z_N, Im Z_N].
inline Eigen::MatrixXd distribution_generators(const NullityReport &report, int n) {
  Eigen::MatrixXd g(n, 2 * report.nullity);
  for (int c = 0; c < report.nullity; ++c) {
    const auto &z = report.kernel_basis[static_cast<std::size_t>(c)];
    for (int r = 0; r < n; ++r) {
      g(r, 2 * c) = z[static_cast<std::size_t>(r)].real();
      g(r, 2 * c + 1) = z[static_cast<std::size_t>(r)].imag();
    }
  }
  return g;
}

inline Classification classify(const Spinor &psi, const Tolerances &tol = {}) {
  const NullityReport rep = nullity(psi, tol);
  const int n = psi.space().n();
  Classification c;
  c.n = n;
  c.nullity = rep.nullity;
  c.rank = rep.nullity;
  if (rep.nullity == 0) {
    c.tag = PurityClass::TotallyImpure;
    return c;
  }
  c.distribution_dim = static_cast<int>(
      detail::split_column_span(distribution_generators(rep, n), tol.rank).first.cols());
  if (2 * rep.nullity == n) {
    c.tag = PurityClass::Pure;
  } else if (c.distribution_dim == 2 * rep.nullity) {
    c.tag = PurityClass::StrictlyPartiallyPure;
  } else {
    c.tag = PurityClass::Impure;
  }
  return c;
}

/// xi_j = i <e_j . psi, psi>. Real by skew-adjointness of e_j; a sizeable
/// imaginary part means the representation is broken.
inline Eigen::VectorXd xi_vector(const Spinor &psi, const Tolerances &tol = {}) {
  const int n = psi.space().n();
  Eigen::VectorXd xi = Eigen::VectorXd::Zero(n);
  if (psi.is_zero()) return xi;
  const double scale = psi.squared_norm();
  for (int j = 1; j <= n; ++j) {
    const Complex v = kI * inner(apply_generator(j, psi), psi);
    if (std::abs(v.imag()) > tol.xi_imaginary * scale) {
      throw AssertionError("xi component " + std::to_string(j) +
                           " has imaginary part " + std::to_string(v.imag()));
    }
    xi(j - 1) = v.real();
  }
  return xi;
}

inline CRFrame cr_frame(const Spinor &psi, const Tolerances &tol = {}) {
  const NullityReport rep = nullity(psi, tol);
  if (rep.nullity == 0) {
    throw EmptyDistributionError("spinor has nullity 0; the distribution D is trivial");
  }
  const int n = psi.space().n();
  CRFrame frame;
  frame.nullity = rep.nullity;
  auto [d, dperp] = detail::split_column_span(distribution_generators(rep, n), tol.rank);
  frame.d_basis = std::move(d);
  frame.dperp_basis = std::move(dperp);

  // Real least squares for Y in X . psi = i Y . psi.
  const Eigen::MatrixXcd k = kernel_matrix(psi);
  const Eigen::MatrixXd a = detail::realify(Eigen::MatrixXcd(kI * k));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  frame.real_system_rank = static_cast<int>(qr.rank());

  const double psi_norm = psi.norm();
  const Eigen::Index dim_d = frame.d_basis.cols();
  Eigen::MatrixXd jx(n, dim_d);
  for (Eigen::Index c = 0; c < dim_d; ++c) {
    const Eigen::VectorXd x = frame.d_basis.col(c);
    const Eigen::VectorXd b = detail::realify(Eigen::VectorXcd(k * x.cast<Complex>()));
    const Eigen::VectorXd y = qr.solve(b);
    const double residual = (a * y - b).norm() / psi_norm;
    frame.j_residual = std::max(frame.j_residual, residual);
    if (residual > tol.j_residual) {
      throw ResidualError("no real Y with X . psi = i Y . psi (residual " +
                          std::to_string(residual) + ")");
    }
    jx.col(c) = -y;
  }
  frame.j_matrix = frame.d_basis.transpose() * jx;
  frame.xi = xi_vector(psi, tol);
  return frame;
}

struct PerpCheck {
  bool partially_pure = false;   // u . psi satisfies X.u.psi + i(JX).u.psi = 0 on D
  double max_defect = 0.0;       // relative to |psi| |u|
  double d_component = 0.0;      // |P_D u| / |u|
  bool consistent = false;       // partially_pure agrees with u in D^perp
};

/// Checks whether u . psi is partially pure with respect to the (D, J) of
/// psi. This holds exactly when u is orthogonal to D.
inline PerpCheck perp_multiplication_check(const Spinor &psi, const Eigen::VectorXd &u,
                                           const Tolerances &tol = {}) {
  detail::require_nonzero(psi);
  const int n = psi.space().n();
  if (u.size() != n) {
    throw DimensionError("vector has " + std::to_string(u.size()) +
                         " components, expected " + std::to_string(n));
  }
  const double u_norm = u.norm();
  if (u_norm == 0.0) throw ZeroVectorError("u must be nonzero");

  const CRFrame frame = cr_frame(psi, tol);
  const std::vector<double> uvec(u.data(), u.data() + n);
  const Spinor phi = apply_vector(uvec, psi);
  const double scale = psi.norm() * u_norm;

  PerpCheck out;
  for (Eigen::Index c = 0; c < frame.d_basis.cols(); ++c) {
    const Eigen::VectorXd x = frame.d_basis.col(c);
    const Eigen::VectorXd jx = frame.d_basis * frame.j_matrix.col(c);
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) z[static_cast<std::size_t>(r)] = Complex(x(r), jx(r));
    const double defect = apply_vector(ComplexVector(psi.space(), std::move(z)), phi).norm() / scale;
    out.max_defect = std::max(out.max_defect, defect);
  }
  out.partially_pure = out.max_defect <= tol.perp_defect;
  out.d_component = (frame.d_basis.transpose() * u).norm() / u_norm;
  out.consistent = out.partially_pure == (out.d_component <= tol.d_membership);
  return out;
}

/// Spectral-norm distance between the orthogonal projectors onto the column
/// spans of two matrices with orthonormal columns.
template <typename Matrix>
double subspace_distance(const Matrix &a, const Matrix &b) {
  const auto pa = (a * a.adjoint()).eval();
  const auto pb = (b * b.adjoint()).eval();
  if (pa.rows() != pb.rows()) throw DimensionError("subspaces live in different spaces");
  using Real = Eigen::Matrix<typename Matrix::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::JacobiSVD<Real> svd(Real(pa - pb));
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace spinorlab
