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

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinorlab/analysis.hpp"
#include "spinorlab/clifford.hpp"
#include "spinorlab/errors.hpp"

namespace spinorlab {

/// Deterministic sample stream. The engine is std::mt19937_64 (a twisted
/// generalized feedback shift register, fully specified by the standard);
/// uniforms and Gaussians are derived here rather than through
/// <random> distributions, whose output is implementation-defined.
class SeededSampler {
 public:
  static constexpr const char *kAlgorithm = "mt19937_64+box-muller/1";

  explicit SeededSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t next_u64() {
    ++counter_;
    return engine_();
  }

  /// Uniform on (0, 1].
  double uniform() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  /// Standard complex Gaussian (unit variance per real component).
  Complex complex_gaussian() {
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  double gaussian() { return complex_gaussian().real(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer; combines a base seed with stream coordinates so that
/// each (suite, n, trial) gets an independent reproducible stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(seed);
  h = mix(h ^ a);
  h = mix(h ^ b);
  h = mix(h ^ c);
  return h;
}

/// psi_1 = u_{+1,..,+1}.
inline Spinor psi_pure(int n) { return Spinor::basis(SpinorSpace(n), 0); }

/// psi_2 = u_{+1,..,+1} + u_{-1,..,-1}; nullity 0 for every n outside {3,4,5}.
inline Spinor psi_totally_impure(int n) {
  const SpinorSpace space(n);
  if (n >= 3 && n <= 5) {
    throw NoTotallyImpureError("there are no totally impure spinors in dimension " +
                               std::to_string(n));
  }
  return Spinor::basis(space, 0) + Spinor::basis(space, space.dim() - 1);
}

inline Spinor random_spinor(const SpinorSpace &space, SeededSampler &sampler) {
  std::vector<Complex> c(space.dim());
  for (Complex &v : c) v = sampler.complex_gaussian();
  return Spinor(space, std::move(c)).normalized();
}

inline Spinor random_chiral_spinor(const SpinorSpace &space, SeededSampler &sampler,
                                   Chirality sign) {
  if (space.odd()) {
    throw ParityError("chiral spinors need even n, got n=" + std::to_string(space.n()));
  }
  for (;;) {
    const Spinor p = chirality_project(random_spinor(space, sampler), sign);
    if (p.norm() >= 1e-6) return p.normalized();
  }
}

inline Eigen::VectorXd random_unit_vector(int n, SeededSampler &sampler) {
  Eigen::VectorXd x(n);
  for (;;) {
    for (int i = 0; i < n; ++i) x(i) = sampler.gaussian();
    const double nrm = x.norm();
    if (nrm > 1e-6) return x / nrm;
  }
}

/// Applies x_1 . x_2 . ... . x_{2p} for random unit vectors: a random element
/// of Spin(n). Preserves the nullity.
inline Spinor random_spin_rotation(const Spinor &psi, SeededSampler &sampler, int pairs = 2) {
  Spinor out = psi;
  const int n = psi.space().n();
  for (int i = 0; i < 2 * pairs; ++i) {
    const Eigen::VectorXd x = random_unit_vector(n, sampler);
    out = apply_vector(std::vector<double>(x.data(), x.data() + n), out);
  }
  return out;
}

/// psi_a (x) psi_b over n_a + n_b. The generators e_1..e_{n_a} of the product
/// space act on the low k_a index bits, so psi_a occupies those bits:
/// c[idx_b * 2^k_a + idx_a] = a[idx_a] b[idx_b].
inline Spinor tensor_spinor(const Spinor &psi_a, const Spinor &psi_b) {
  const SpinorSpace &sa = psi_a.space();
  const SpinorSpace &sb = psi_b.space();
  if (sa.odd()) {
    throw ParityError("the leading tensor factor needs even n, got n=" + std::to_string(sa.n()));
  }
  const SpinorSpace product(sa.n() + sb.n());
  std::vector<Complex> c(product.dim());
  for (std::size_t ib = 0; ib < sb.dim(); ++ib) {
    for (std::size_t ia = 0; ia < sa.dim(); ++ia) {
      c[(ib << sa.k()) | ia] = psi_a[ia] * psi_b[ib];
    }
  }
  return Spinor(product, std::move(c));
}

/// Spinor of nullity N in dimension n, built as psi_pure(2N) (x)
/// psi_totally_impure(n - 2N). The result is checked against the SVD nullity
/// before it is returned.
inline Spinor construct_with_nullity(int n, int target, const Tolerances &tol = {}) {
  const SpinorSpace space(n);
  if (target < 0 || target > space.k()) {
    throw RangeError("nullity " + std::to_string(target) + " outside 0.." +
                     std::to_string(space.k()) + " for n=" + std::to_string(n));
  }
  const int rest = n - 2 * target;
  if (rest >= 3 && rest <= 5) {
    throw UnreachableNullityError("nullity " + std::to_string(target) + " in dimension " +
                                  std::to_string(n) + " would need a totally impure factor in "
                                  "dimension " + std::to_string(rest));
  }
  Spinor psi = [&] {
    // rest == 1 is odd n at maximal nullity, which psi_1 already realizes.
    if (rest <= 1) return psi_pure(n);
    if (target == 0) return psi_totally_impure(n);
    return tensor_spinor(psi_pure(2 * target), psi_totally_impure(rest));
  }();
  const int measured = nullity(psi, tol).nullity;
  if (measured != target) {
    throw InternalVerificationError("constructed spinor has nullity " + std::to_string(measured) +
                                    ", expected " + std::to_string(target));
  }
  return psi;
}

}  // namespace spinorlab
