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

// Complex spinor representation of the Clifford algebra Cl_n.
//
// Generators are realized on Sigma_n = C^(2^k), k = floor(n/2), as tensor
// products of the 2x2 matrices
//
//   g1 = diag(i, -i),   g2 = [[0, i], [i, 0]],   T = [[0, -i], [i, 0]]
//
// with e_{2a-1} = Id x .. x g1 x T x .. x T and e_{2a} likewise with g2
// (the g-factor sits in tensor slot k-a+1), and for odd n the extra generator
// e_{2k+1} = i T x .. x T. Spinors are stored in the orthonormal basis
// u_eps = u_{eps_1} x .. x u_{eps_k}, u_{+1} = (1,-i)/sqrt2, u_{-1} = (1,i)/sqrt2.
//
// Basis index convention: eps_1 is the most significant bit of the index and
// eps_j = +1 encodes bit 0, so u_{+1,..,+1} is index 0. Tensor slot s maps to
// bit k-s, which means the generator pair (e_{2a-1}, e_{2a}) flips bit a-1.
//
// In the u-basis every generator is a signed permutation:
//
//   e_j u_eps = unit_j * prod(eps over parity_mask_j) * u_{eps ^ flip_mask_j}
//
// so the matrix-free kernels below cost O(2^k) per application. The dense
// Kronecker construction (`dense_generator_matrix`) is kept only as a test
// oracle.
//
// Conventions not fixed by the underlying mathematics:
//  * `inner(phi, psi)` is linear in phi and conjugate-linear in psi.
//  * The complex volume element is omega_C = c(n) e_1 ... e_n with
//    c(n) = i^k for even n and c(n) = (-1)^k (-i)^(k+1) for odd n = 2k+1. This
//    gives omega_C^2 = Id, and omega_C = +Id on Sigma_n for odd n.

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinorlab/errors.hpp"

namespace spinorlab {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Largest ambient dimension the library accepts (2^20 coefficients).
inline constexpr int kMaxAmbientDimension = 40;

class SpinorSpace {
 public:
  explicit SpinorSpace(int n) : n_(n) {
    if (n < 2) {
      throw DimensionError("ambient dimension must be >= 2, got " +
                           std::to_string(n));
    }
    if (n > kMaxAmbientDimension) {
      throw DimensionError("ambient dimension " + std::to_string(n) +
                           " exceeds the supported maximum of " +
                           std::to_string(kMaxAmbientDimension));
    }
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return n_ / 2; }
  std::size_t dim() const noexcept { return std::size_t{1} << k(); }
  bool odd() const noexcept { return (n_ % 2) != 0; }

  friend bool operator==(const SpinorSpace &, const SpinorSpace &) = default;

 private:
  int n_;
};

inline SpinorSpace make_space(int n) { return SpinorSpace(n); }

namespace detail {

inline void require_finite(std::span<const Complex> values, const char *what) {
  for (const Complex &c : values) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw RangeError(std::string(what) + " has a non-finite entry");
    }
  }
}

inline void require_same_space(const SpinorSpace &a, const SpinorSpace &b) {
  if (!(a == b)) {
    throw DimensionError("space mismatch: n=" + std::to_string(a.n()) +
                         " vs n=" + std::to_string(b.n()));
  }
}

inline double parity_sign(std::size_t index, std::size_t mask) {
  return (std::popcount(index & mask) & 1) ? -1.0 : 1.0;
}

}  // namespace detail

/// Maps a sign tuple (eps_1, .., eps_k) to its basis index.
inline std::size_t eps_to_index(std::span<const int> eps) {
  if (eps.empty() || eps.size() > static_cast<std::size_t>(kMaxAmbientDimension / 2)) {
    throw RangeError("sign tuple must have between 1 and " +
                     std::to_string(kMaxAmbientDimension / 2) + " entries");
  }
  std::size_t index = 0;
  for (int e : eps) {
    if (e != 1 && e != -1) {
      throw RangeError("sign tuple entries must be +1 or -1, got " +
                       std::to_string(e));
    }
    index = (index << 1) | (e == -1 ? 1u : 0u);
  }
  return index;
}

inline std::vector<int> index_to_eps(const SpinorSpace &space, std::size_t index) {
  if (index >= space.dim()) {
    throw RangeError("basis index " + std::to_string(index) +
                     " out of range for dimension " + std::to_string(space.dim()));
  }
  const int k = space.k();
  std::vector<int> eps(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    const std::size_t bit = std::size_t{1} << (k - 1 - s);
    eps[static_cast<std::size_t>(s)] = (index & bit) ? -1 : 1;
  }
  return eps;
}

/// Element of Sigma_n in the u_eps basis.
class Spinor {
 public:
  Spinor(SpinorSpace space, std::vector<Complex> coeffs)
      : space_(space), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != space_.dim()) {
      throw DimensionError("spinor over n=" + std::to_string(space_.n()) +
                           " needs " + std::to_string(space_.dim()) +
                           " coefficients, got " + std::to_string(coeffs_.size()));
    }
    detail::require_finite(coeffs_, "spinor");
  }

  static Spinor zero(SpinorSpace space) {
    return Spinor(space, std::vector<Complex>(space.dim()));
  }

  static Spinor basis(SpinorSpace space, std::size_t index) {
    if (index >= space.dim()) {
      throw RangeError("basis index " + std::to_string(index) + " out of range");
    }
    std::vector<Complex> c(space.dim());
    c[index] = 1.0;
    return Spinor(space, std::move(c));
  }

  const SpinorSpace &space() const noexcept { return space_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Complex operator[](std::size_t i) const { return coeffs_[i]; }

  double squared_norm() const noexcept {
    double s = 0.0;
    for (const Complex &c : coeffs_) s += std::norm(c);
    return s;
  }
  double norm() const noexcept { return std::sqrt(squared_norm()); }
  bool is_zero() const noexcept { return squared_norm() == 0.0; }

  Spinor normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) throw ZeroSpinorError("cannot normalize the zero spinor");
    return *this * Complex(1.0 / nrm);
  }

  Eigen::VectorXcd to_eigen() const {
    return Eigen::Map<const Eigen::VectorXcd>(coeffs_.data(),
                                              static_cast<Eigen::Index>(coeffs_.size()));
  }
  static Spinor from_eigen(SpinorSpace space, const Eigen::VectorXcd &v) {
    return Spinor(space, std::vector<Complex>(v.data(), v.data() + v.size()));
  }

  Spinor &operator+=(const Spinor &o) {
    detail::require_same_space(space_, o.space_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Spinor &operator-=(const Spinor &o) {
    detail::require_same_space(space_, o.space_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Spinor &operator*=(Complex a) {
    for (Complex &c : coeffs_) c *= a;
    return *this;
  }

  friend Spinor operator+(Spinor a, const Spinor &b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor &b) { return a -= b; }
  friend Spinor operator*(Spinor a, Complex s) { return a *= s; }
  friend Spinor operator*(Complex s, Spinor a) { return a *= s; }

 private:
  SpinorSpace space_;
  std::vector<Complex> coeffs_;
};

/// Complexified vector Z = sum z_j e_j in R^n (x) C.
class ComplexVector {
 public:
  ComplexVector(SpinorSpace space, std::vector<Complex> components)
      : space_(space), components_(std::move(components)) {
    if (components_.size() != static_cast<std::size_t>(space_.n())) {
      throw DimensionError("vector over n=" + std::to_string(space_.n()) +
                           " needs " + std::to_string(space_.n()) +
                           " components, got " + std::to_string(components_.size()));
    }
    detail::require_finite(components_, "vector");
  }

  static ComplexVector real(SpinorSpace space, std::span<const double> x) {
    return ComplexVector(space, std::vector<Complex>(x.begin(), x.end()));
  }

  /// The generator e_j, 1 <= j <= n.
  static ComplexVector unit(SpinorSpace space, int j) {
    if (j < 1 || j > space.n()) {
      throw RangeError("generator index " + std::to_string(j) + " outside 1.." +
                       std::to_string(space.n()));
    }
    std::vector<Complex> c(static_cast<std::size_t>(space.n()));
    c[static_cast<std::size_t>(j - 1)] = 1.0;
    return ComplexVector(space, std::move(c));
  }

  const SpinorSpace &space() const noexcept { return space_; }
  std::span<const Complex> components() const noexcept { return components_; }
  Complex operator[](std::size_t i) const { return components_[i]; }
  int size() const noexcept { return space_.n(); }

  double norm() const noexcept {
    double s = 0.0;
    for (const Complex &c : components_) s += std::norm(c);
    return std::sqrt(s);
  }

 private:
  SpinorSpace space_;
  std::vector<Complex> components_;
};

/// Signed-permutation description of one generator in the u-basis:
/// (e_j psi)[i ^ flip_mask] = unit * (-1)^popcount(i & parity_mask) * psi[i].
struct GeneratorKernel {
  std::size_t flip_mask = 0;
  std::size_t parity_mask = 0;
  Complex unit{1.0, 0.0};
};

inline GeneratorKernel generator_kernel(const SpinorSpace &space, int j) {
  const int n = space.n();
  const int k = space.k();
  if (j < 1 || j > n) {
    throw RangeError("generator index " + std::to_string(j) + " outside 1.." +
                     std::to_string(n));
  }
  if (j == 2 * k + 1) {
    const double sign = (k % 2) ? -1.0 : 1.0;
    return {0, space.dim() - 1, kI * sign};
  }
  const int a = (j + 1) / 2;
  const std::size_t bit = std::size_t{1} << (a - 1);
  const double sign = ((a - 1) % 2) ? -1.0 : 1.0;
  if (j % 2 == 1) return {bit, bit - 1, kI * sign};
  return {bit, (bit << 1) - 1, Complex(sign)};
}

namespace detail {

inline void accumulate_generator(const GeneratorKernel &g, Complex scale,
                                 std::span<const Complex> in,
                                 std::span<Complex> out) {
  const Complex u = scale * g.unit;
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i ^ g.flip_mask] += u * parity_sign(i, g.parity_mask) * in[i];
  }
}

}  // namespace detail

/// e_j . psi, computed matrix-free.
inline Spinor apply_generator(int j, const Spinor &psi) {
  const GeneratorKernel g = generator_kernel(psi.space(), j);
  std::vector<Complex> out(psi.size());
  detail::accumulate_generator(g, 1.0, psi.coeffs(), out);
  return Spinor(psi.space(), std::move(out));
}

/// Z . psi = sum_j z_j (e_j . psi).
inline Spinor apply_vector(const ComplexVector &v, const Spinor &psi) {
  detail::require_same_space(v.space(), psi.space());
  std::vector<Complex> out(psi.size());
  for (int j = 1; j <= psi.space().n(); ++j) {
    const Complex z = v[static_cast<std::size_t>(j - 1)];
    if (z == Complex(0.0)) continue;
    detail::accumulate_generator(generator_kernel(psi.space(), j), z,
                                 psi.coeffs(), out);
  }
  return Spinor(psi.space(), std::move(out));
}

inline Spinor apply_vector(std::span<const double> x, const Spinor &psi) {
  return apply_vector(ComplexVector::real(psi.space(), x), psi);
}

/// Hermitian product, linear in `phi`, conjugate-linear in `psi`.
inline Complex inner(const Spinor &phi, const Spinor &psi) {
  detail::require_same_space(phi.space(), psi.space());
  Complex s = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) s += phi[i] * std::conj(psi[i]);
  return s;
}

/// Phase c(n) of the complex volume element (see file comment).
inline Complex volume_phase(const SpinorSpace &space) {
  const int k = space.k();
  auto ipow = [](int p) {
    static constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((p % 4) + 4) % 4];
  };
  if (!space.odd()) return ipow(k);
  // (-1)^k (-i)^(k+1) = i^(2k) i^(-(k+1)) = i^(k-1)
  return ipow(k - 1);
}

/// omega_C . psi.
inline Spinor volume_element(const Spinor &psi) {
  Spinor out = psi;
  for (int j = psi.space().n(); j >= 1; --j) out = apply_generator(j, out);
  return out * volume_phase(psi.space());
}

enum class Chirality : int { Positive = 1, Negative = -1 };

/// (psi +- omega_C psi) / 2, even n only.
inline Spinor chirality_project(const Spinor &psi, Chirality sign) {
  if (psi.space().odd()) {
    throw ParityError("chirality splitting requires even n, got n=" +
                      std::to_string(psi.space().n()));
  }
  const double s = static_cast<int>(sign);
  return (psi + volume_element(psi) * Complex(s)) * Complex(0.5);
}

/// Dense 2^k x 2^k operator in the u-basis; test oracle only.
struct DenseOperator {
  SpinorSpace space;
  Eigen::MatrixXcd matrix;

  Spinor apply(const Spinor &psi) const {
    detail::require_same_space(space, psi.space());
    return Spinor::from_eigen(space, matrix * psi.to_eigen());
  }
};

namespace detail {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Eigen::MatrixXcd kron_chain(const std::vector<Eigen::MatrixXcd> &factors) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto &f : factors) out = kron(out, f);
  return out;
}

}  // namespace detail

/// kappa_n(e_j) built from explicit Kronecker products of Id, g1, g2, T in the
/// standard basis of C^(2^k), then conjugated into the u-basis.
inline DenseOperator dense_generator_matrix(const SpinorSpace &space, int j) {
  const int n = space.n();
  const int k = space.k();
  if (j < 1 || j > n) {
    throw RangeError("generator index " + std::to_string(j) + " outside 1.." +
                     std::to_string(n));
  }
  const Complex i = kI;
  Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd g1(2, 2), g2(2, 2), t(2, 2), u(2, 2);
  g1 << i, 0.0, 0.0, -i;
  g2 << 0.0, i, i, 0.0;
  t << 0.0, -i, i, 0.0;
  const double r = 1.0 / std::sqrt(2.0);
  // columns: u_{+1}, u_{-1}
  u << r, r, -i * r, i * r;

  std::vector<Eigen::MatrixXcd> factors;
  Complex prefactor = 1.0;
  if (j == 2 * k + 1) {
    factors.assign(static_cast<std::size_t>(k), t);
    prefactor = i;
  } else {
    const int a = (j + 1) / 2;
    const int slot = k - a + 1;
    for (int s = 1; s <= k; ++s) {
      if (s < slot) {
        factors.push_back(id2);
      } else if (s == slot) {
        factors.push_back(j % 2 == 1 ? g1 : g2);
      } else {
        factors.push_back(t);
      }
    }
  }
  const Eigen::MatrixXcd standard = prefactor * detail::kron_chain(factors);
  const Eigen::MatrixXcd change =
      detail::kron_chain(std::vector<Eigen::MatrixXcd>(static_cast<std::size_t>(k), u));
  return {space, change.adjoint() * standard * change};
}

}  // namespace spinorlab
