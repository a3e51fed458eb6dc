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

// Randomized verification suites and their JSON report.
//
// Every trial draws from its own sampler seeded with
// derive_seed(config.seed, suite, n, trial), so a report depends only on the
// configuration. Check failures never abort a run; they are recorded. The only
// non-deterministic report content is summary.timing.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "spinorlab/analysis.hpp"
#include "spinorlab/clifford.hpp"
#include "spinorlab/constructors.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/kahler.hpp"

namespace spinorlab {

inline constexpr const char *kReportFormat = "spinorlab-report/1";
inline constexpr int kMaxSuiteDimension = 14;

inline const std::vector<std::string> &all_suites() {
  static const std::vector<std::string> names = {
      "lemma22", "prop36", "prop37", "strictness", "kaehler", "clifford", "constructors"};
  return names;
}

struct SuiteConfig {
  int n_min = 2;
  int n_max = 12;
  int trials = 100;
  std::uint64_t seed = 0;
  Tolerances tolerances;
  std::vector<std::string> suites;

  void validate() const {
    if (n_min < 2 || n_max < n_min || n_max > kMaxSuiteDimension) {
      throw ConfigError("dimension range must satisfy 2 <= n_min <= n_max <= " +
                        std::to_string(kMaxSuiteDimension) + ", got [" + std::to_string(n_min) +
                        ", " + std::to_string(n_max) + "]");
    }
    if (trials < 1) throw ConfigError("trials must be >= 1");
    for (const auto &s : suites) {
      if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
        throw ConfigError("unknown suite '" + s + "'");
      }
    }
  }
};

enum class CheckStatus { Pass, Fail, Error };

inline const char *to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "?";
}

struct CheckRecord {
  std::string suite;
  std::string check;
  int n = 0;
  std::optional<int> r;
  int trial = 0;
  CheckStatus status = CheckStatus::Pass;
  std::map<std::string, double> metrics;
  std::string detail;
  std::uint64_t seed = 0;
};

struct CheckReport {
  SuiteConfig config;
  std::vector<CheckRecord> records;
  double wall_time_s = 0.0;

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(std::count_if(
        records.begin(), records.end(), [s](const CheckRecord &r) { return r.status == s; }));
  }
  bool all_passed() const { return count(CheckStatus::Pass) == records.size(); }
};

namespace detail {

/// Outcome of one check body: pass flag plus metrics.
struct Outcome {
  bool pass = true;
  std::map<std::string, double> metrics;
  std::string detail;

  Outcome &metric(const std::string &name, double v) {
    metrics[name] = v;
    return *this;
  }
  /// Records `value` and requires value <= bound.
  Outcome &at_most(const std::string &name, double value, double bound) {
    metrics[name] = value;
    if (!(value <= bound)) {
      pass = false;
      if (detail.empty()) detail = name + " exceeds " + std::to_string(bound);
    }
    return *this;
  }
  Outcome &expect(bool cond, const std::string &what) {
    if (!cond) {
      pass = false;
      if (detail.empty()) detail = what;
    }
    return *this;
  }
};

class SuiteRunner {
 public:
  SuiteRunner(const SuiteConfig &cfg, std::vector<CheckRecord> &out) : cfg_(cfg), out_(out) {}

  /// Runs `body` with a sampler seeded for (suite, n, trial) and appends one
  /// record. Exceptions become Error records.
  void run(const std::string &suite, const std::string &check, int n, int trial,
           const std::function<Outcome(SeededSampler &)> &body,
           std::optional<int> r = std::nullopt) {
    CheckRecord rec;
    rec.suite = suite;
    rec.check = check;
    rec.n = n;
    rec.r = r;
    rec.trial = trial;
    rec.seed = derive_seed(cfg_.seed, suite_id(suite), static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(trial) ^ (check_id(check) << 32));
    SeededSampler sampler(rec.seed);
    try {
      Outcome o = body(sampler);
      rec.status = o.pass ? CheckStatus::Pass : CheckStatus::Fail;
      rec.metrics = std::move(o.metrics);
      rec.detail = std::move(o.detail);
    } catch (const Error &e) {
      rec.status = CheckStatus::Error;
      rec.detail = std::string(e.kind()) + ": " + e.what();
    } catch (const std::exception &e) {
      rec.status = CheckStatus::Error;
      rec.detail = e.what();
    }
    out_.push_back(std::move(rec));
  }

  const SuiteConfig &config() const { return cfg_; }

 private:
  static std::uint64_t suite_id(const std::string &s) {
    const auto &all = all_suites();
    return static_cast<std::uint64_t>(std::find(all.begin(), all.end(), s) - all.begin());
  }
  static std::uint64_t check_id(const std::string &s) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    return h & 0xffffffffULL;
  }

  const SuiteConfig &cfg_;
  std::vector<CheckRecord> &out_;
};

inline double max_abs(const Eigen::MatrixXd &m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

/// A spinor with nonzero nullity for any n: a random chiral spinor of an even
/// subspace of dimension <= 6 (hence pure there), tensored with a random
/// spinor, then moved by a random Spin(n) element.
inline Spinor structured_spinor(int n, SeededSampler &s) {
  std::vector<int> choices;
  for (int na : {2, 4, 6}) {
    if (na <= n && n - na != 1) choices.push_back(na);
  }
  // n = 3: every nonzero spinor already has nullity 1.
  if (choices.empty()) return random_spin_rotation(random_spinor(SpinorSpace(n), s), s).normalized();
  const int na = choices[static_cast<std::size_t>(s.next_u64() % choices.size())];
  const Spinor a = random_chiral_spinor(SpinorSpace(na), s,
                                        (s.next_u64() & 1) ? Chirality::Negative
                                                           : Chirality::Positive);
  const Spinor psi = na == n ? a : tensor_spinor(a, random_spinor(SpinorSpace(n - na), s));
  return random_spin_rotation(psi, s).normalized();
}

/// CR-frame invariants shared by the strictness suite and the tests.
inline Outcome check_cr_frame(const Spinor &psi, const Tolerances &tol) {
  Outcome o;
  const NullityReport rep = nullity(psi, tol);
  const int n = psi.space().n();
  o.metric("nullity", rep.nullity);
  if (rep.nullity == 0) {
    const auto dim = static_cast<double>(
        split_column_span(distribution_generators(rep, n), tol.rank).first.cols());
    o.metric("dim_d", dim).expect(dim == 0.0, "nullity 0 but D is nontrivial");
    return o;
  }
  const CRFrame f = cr_frame(psi, tol);
  const Eigen::Index dd = f.d_basis.cols();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dd, dd);
  o.metric("dim_d", static_cast<double>(dd));
  o.expect(dd == 2 * rep.nullity, "dim D != 2 N");
  o.expect(f.real_system_rank == n, "real system for J is rank deficient");
  o.at_most("j_square_defect", max_abs(f.j_matrix * f.j_matrix + id), 1e-10);
  o.at_most("j_orthogonality_defect", max_abs(f.j_matrix.transpose() * f.j_matrix - id), 1e-10);
  double gxjx = 0.0, norm_jx = 0.0;
  for (Eigen::Index c = 0; c < dd; ++c) {
    const Eigen::VectorXd x = f.d_basis.col(c);
    const Eigen::VectorXd jx = f.d_basis * f.j_matrix.col(c);
    gxjx = std::max(gxjx, std::abs(x.dot(jx)));
    norm_jx = std::max(norm_jx, std::abs(jx.norm() - 1.0));
  }
  o.at_most("g_x_jx", gxjx, 1e-10);
  o.at_most("jx_norm_defect", norm_jx, 1e-10);
  o.at_most("d_dperp_overlap", max_abs(f.d_basis.transpose() * f.dperp_basis), 1e-10);
  o.at_most("xi_in_d", (f.d_basis.transpose() * f.xi).cwiseAbs().maxCoeff(), 1e-10);
  o.metric("j_residual", f.j_residual);
  return o;
}

inline void suite_lemma22(SuiteRunner &run, int n) {
  const auto &tol = run.config().tolerances;
  run.run("lemma22", "psi1_nullity", n, 0, [&](SeededSampler &) {
    const NullityReport rep = nullity(psi_pure(n), tol);
    Outcome o;
    o.metric("nullity", rep.nullity).metric("expected", n / 2).metric("rank_gap", rep.rank_gap);
    return o.expect(rep.nullity == n / 2, "psi1 nullity != floor(n/2)");
  });
  if (n < 3 || n > 5) {
    run.run("lemma22", "psi2_nullity", n, 0, [&](SeededSampler &) {
      const NullityReport rep = nullity(psi_totally_impure(n), tol);
      Outcome o;
      o.metric("nullity", rep.nullity).metric("rank_gap", rep.rank_gap);
      return o.expect(rep.nullity == 0, "psi2 is not totally impure");
    });
    return;
  }
  for (int t = 0; t < run.config().trials; ++t) {
    run.run("lemma22", "no_totally_impure", n, t, [&](SeededSampler &s) {
      const NullityReport rep = nullity(random_spinor(SpinorSpace(n), s), tol);
      Outcome o;
      o.metric("nullity", rep.nullity).metric("rank_gap", rep.rank_gap);
      if (n == 3) return o.expect(rep.nullity == 1, "nullity != 1 in dimension 3");
      if (n == 5) return o.expect(rep.nullity == 2, "nullity != 2 in dimension 5");
      return o.expect(rep.nullity >= 1, "totally impure spinor in dimension 4");
    });
  }
}

inline void suite_prop36(SuiteRunner &run, int n) {
  if (n != 4 && n != 6) return;
  const auto &tol = run.config().tolerances;
  for (Chirality c : {Chirality::Positive, Chirality::Negative}) {
    const std::string name = c == Chirality::Positive ? "chiral_purity_plus" : "chiral_purity_minus";
    for (int t = 0; t < run.config().trials; ++t) {
      run.run("prop36", name, n, t, [&](SeededSampler &s) {
        const NullityReport rep = nullity(random_chiral_spinor(SpinorSpace(n), s, c), tol);
        Outcome o;
        o.metric("nullity", rep.nullity).metric("rank_gap", rep.rank_gap);
        return o.expect(rep.nullity == n / 2, "chiral spinor is not pure");
      });
    }
  }
}

/// Rank and characteristic-vector checks in dimensions 3 and 5.
inline Outcome check_low_dimension(const Spinor &psi, const Tolerances &tol) {
  const int n = psi.space().n();
  Outcome o;
  const Classification c = classify(psi, tol);
  o.metric("rank", c.rank);
  o.expect(c.tag == PurityClass::StrictlyPartiallyPure && c.rank == (n - 1) / 2,
           std::string("classified as ") + to_string(c.tag) + " rank " + std::to_string(c.rank));
  const Eigen::VectorXd xi = xi_vector(psi, tol);
  o.at_most("xi_norm_defect", std::abs(xi.norm() - 1.0), 1e-10);
  const Spinor lhs = apply_vector(std::vector<double>(xi.data(), xi.data() + n), psi) + kI * psi;
  o.at_most("xi_action_defect", lhs.norm(), 1e-10);
  return o;
}

inline void suite_prop37(SuiteRunner &run, int n) {
  if (n != 3 && n != 5) return;
  for (int t = 0; t < run.config().trials; ++t) {
    run.run("prop37", "rank_and_xi", n, t, [&](SeededSampler &s) {
      return check_low_dimension(random_spinor(SpinorSpace(n), s), run.config().tolerances);
    });
  }
}

inline Outcome check_perp(const Spinor &psi, const Eigen::MatrixXd &basis, bool expect_holds,
                          SeededSampler &s, const Tolerances &tol) {
  Eigen::VectorXd coeff(basis.cols());
  for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) = s.gaussian();
  const Eigen::VectorXd u = basis * coeff;
  const PerpCheck pc = perp_multiplication_check(psi, u, tol);
  Outcome o;
  o.metric("defect", pc.max_defect).metric("d_component", pc.d_component);
  o.expect(pc.consistent, "partial purity of u.psi disagrees with u in D^perp");
  if (expect_holds) {
    o.expect(pc.partially_pure && pc.max_defect <= 1e-10, "u in D^perp but u.psi not partially pure");
  } else {
    o.expect(!pc.partially_pure && pc.max_defect >= 1e-3, "u in D but u.psi partially pure");
  }
  return o;
}

inline void suite_strictness(SuiteRunner &run, int n) {
  const auto &tol = run.config().tolerances;
  for (int t = 0; t < run.config().trials; ++t) {
    auto sample = [n, t](SeededSampler &s) {
      return (t % 2 == 0) ? random_spinor(SpinorSpace(n), s) : structured_spinor(n, s);
    };
    run.run("strictness", "cr_frame", n, t,
            [&](SeededSampler &s) { return check_cr_frame(sample(s), tol); });
    if (n < 3 || n > 8) continue;
    // The perp checks need N >= 1 and a nontrivial D^perp; skip trials without one.
    SeededSampler probe(derive_seed(run.config().seed, 0x32, static_cast<std::uint64_t>(n),
                                    static_cast<std::uint64_t>(t)));
    const Spinor psi = sample(probe);
    int nul = 0;
    try {
      nul = nullity(psi, tol).nullity;
    } catch (const Error &) {
      // Re-run inside the runner so the failure lands in the report.
      run.run("strictness", "lemma32_sample", n, t, [&](SeededSampler &) {
        (void)nullity(psi, tol);
        return Outcome{};
      });
      continue;
    }
    if (nul == 0 || 2 * nul == n) continue;
    run.run("strictness", "lemma32_perp", n, t, [&](SeededSampler &s) {
      return check_perp(psi, cr_frame(psi, tol).dperp_basis, true, s, tol);
    });
    run.run("strictness", "lemma32_d", n, t, [&](SeededSampler &s) {
      return check_perp(psi, cr_frame(psi, tol).d_basis, false, s, tol);
    });
  }
}

inline Spinor random_level_spinor(const KaehlerSpectrum &spec, int r, SeededSampler &s) {
  const KaehlerLevel &lvl = spec.level(r);
  Spinor psi = Spinor::zero(lvl.basis.front().space());
  for (const Spinor &b : lvl.basis) psi += b * s.complex_gaussian();
  return psi.normalized();
}

inline void suite_kaehler(SuiteRunner &run, int n) {
  if (n % 2 != 0) return;
  const int m = n / 2;
  const ComplexStructureMatrix j = standard_j(m);
  std::optional<KaehlerSpectrum> spec;
  run.run("kaehler", "spectrum", n, 0, [&](SeededSampler &) {
    spec = kaehler_spectrum(j);
    Outcome o;
    double residual = 0.0;
    for (const auto &lvl : spec->levels) residual = std::max(residual, lvl.max_residual);
    o.at_most("eigenvalue_residual", residual, 1e-9);
    const Eigen::MatrixXcd a = alpha_matrix(j);
    o.at_most("skew_hermitian_defect", (a + a.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    return o;
  });
  if (!spec) return;
  for (int t = 0; t < run.config().trials; ++t) {
    run.run("kaehler", "raising_lowering", n, t, [&](SeededSampler &s) {
      const int r = static_cast<int>(s.next_u64() % static_cast<std::uint64_t>(m + 1));
      const Spinor psi = random_level_spinor(*spec, r, s);
      const Eigen::VectorXd x = random_unit_vector(n, s);
      Outcome o;
      o.metric("r", r);
      o.at_most("raising_defect", raising_defect(*spec, j, x, psi, r), 1e-10);
      o.at_most("lowering_defect", lowering_defect(*spec, j, x, psi, r), 1e-10);
      return o;
    });
    run.run("kaehler", "extreme_level_purity", n, t, [&](SeededSampler &s) {
      const int r = (s.next_u64() & 1) ? m : 0;
      const NullityReport rep = nullity(random_level_spinor(*spec, r, s), run.config().tolerances);
      Outcome o;
      o.metric("r", r).metric("nullity", rep.nullity);
      return o.expect(rep.nullity == m, "extreme-level spinor is not pure");
    });
  }
}

/// Clifford relations, isometry, skew-adjointness and agreement with the
/// dense Kronecker oracle for one random spinor.
inline Outcome check_clifford(const SpinorSpace &space, const std::vector<DenseOperator> &dense,
                              SeededSampler &s) {
  const int n = space.n();
  const Spinor psi = random_spinor(space, s);
  const Spinor phi = random_spinor(space, s);
  std::vector<Spinor> e_psi;
  for (int j = 1; j <= n; ++j) e_psi.push_back(apply_generator(j, psi));

  double anti = 0.0, iso = 0.0, oracle = 0.0;
  for (int j = 1; j <= n; ++j) {
    const Spinor &ej = e_psi[static_cast<std::size_t>(j - 1)];
    iso = std::max(iso, std::abs(ej.norm() - psi.norm()) / psi.norm());
    oracle = std::max(oracle, (ej - dense[static_cast<std::size_t>(j - 1)].apply(psi)).norm() / psi.norm());
    for (int l = 1; l <= n; ++l) {
      Spinor sum = apply_generator(j, e_psi[static_cast<std::size_t>(l - 1)]) + apply_generator(l, ej);
      if (j == l) sum += psi * Complex(2.0);
      anti = std::max(anti, sum.norm() / psi.norm());
    }
  }
  const Eigen::VectorXd v = random_unit_vector(n, s);
  const std::vector<double> vv(v.data(), v.data() + n);
  const double skew = std::abs(inner(apply_vector(vv, phi), psi) + inner(phi, apply_vector(vv, psi)));
  const Spinor w = volume_element(psi);
  double vol = (volume_element(w) - psi).norm();
  if (space.odd()) vol = std::max(vol, (w - psi).norm());

  Outcome o;
  o.at_most("anticommutation", anti, 1e-12);
  o.at_most("isometry", iso, 1e-12);
  o.at_most("skew_adjointness", skew, 1e-12);
  o.at_most("oracle_equivalence", oracle, 1e-12);
  o.at_most("volume_element", vol, 1e-12);
  return o;
}

inline void suite_clifford(SuiteRunner &run, int n) {
  const SpinorSpace space(n);
  std::vector<DenseOperator> dense;
  for (int j = 1; j <= n; ++j) dense.push_back(dense_generator_matrix(space, j));
  for (int t = 0; t < run.config().trials; ++t) {
    run.run("clifford", "relations", n, t,
            [&](SeededSampler &s) { return check_clifford(space, dense, s); });
  }
}

inline void suite_constructors(SuiteRunner &run, int n) {
  const auto &tol = run.config().tolerances;
  for (int target = 0; target <= n / 2; ++target) {
    const int rest = n - 2 * target;
    const bool reachable = rest < 3 || rest > 5;
    run.run("constructors", reachable ? "construct_with_nullity" : "unreachable_nullity", n, 0,
            [&](SeededSampler &) {
              Outcome o;
              o.metric("target", target);
              if (reachable) {
                const Spinor psi = construct_with_nullity(n, target, tol);
                return o.metric("nullity", nullity(psi, tol).nullity);
              }
              try {
                (void)construct_with_nullity(n, target, tol);
              } catch (const UnreachableNullityError &) {
                return o;
              }
              return o.expect(false, "expected UnreachableNullityError");
            },
            target);
  }
  if (n < 4) return;
  for (int t = 0; t < run.config().trials; ++t) {
    run.run("constructors", "pure_factor_additivity", n, t, [&](SeededSampler &s) {
      const int p = 1 + static_cast<int>(s.next_u64() % static_cast<std::uint64_t>((n - 2) / 2));
      const Spinor phi = random_spinor(SpinorSpace(n - 2 * p), s);
      const Spinor prod = tensor_spinor(psi_pure(2 * p), phi);
      const int np = nullity(prod, tol).nullity;
      const int nf = nullity(phi, tol).nullity;
      Outcome o;
      o.metric("p", p).metric("nullity", np).metric("factor_nullity", nf);
      o.expect(np == p + nf, "nullity is not additive for a pure first factor");
      o.at_most("norm_defect", std::abs(prod.norm() - phi.norm()), 1e-13);
      return o;
    });
  }
}

}  // namespace detail

inline CheckReport run_suite(const SuiteConfig &config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.config = config;
  detail::SuiteRunner runner(report.config, report.records);
  using Fn = void (*)(detail::SuiteRunner &, int);
  const std::map<std::string, Fn> table = {
      {"lemma22", detail::suite_lemma22},       {"prop36", detail::suite_prop36},
      {"prop37", detail::suite_prop37},         {"strictness", detail::suite_strictness},
      {"kaehler", detail::suite_kaehler},       {"clifford", detail::suite_clifford},
      {"constructors", detail::suite_constructors}};
  for (const auto &name : all_suites()) {
    if (std::find(config.suites.begin(), config.suites.end(), name) == config.suites.end()) continue;
    for (int n = config.n_min; n <= config.n_max; ++n) table.at(name)(runner, n);
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace detail {

inline nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const CheckReport &report) {
  using nlohmann::ordered_json;
  const SuiteConfig &c = report.config;
  ordered_json cfg = {{"n_min", c.n_min},
                      {"n_max", c.n_max},
                      {"trials", c.trials},
                      {"seed", c.seed},
                      {"suites", c.suites},
                      {"sampler", SeededSampler::kAlgorithm},
                      {"tolerances",
                       {{"rank", c.tolerances.rank},
                        {"rank_gap", c.tolerances.rank_gap},
                        {"j_residual", c.tolerances.j_residual},
                        {"xi_imaginary", c.tolerances.xi_imaginary},
                        {"perp_defect", c.tolerances.perp_defect},
                        {"d_membership", c.tolerances.d_membership}}}};
  ordered_json records = ordered_json::array();
  for (const auto &r : report.records) {
    ordered_json rec = {{"suite", r.suite}, {"check", r.check}, {"n", r.n}};
    if (r.r) rec["r"] = *r.r;
    rec["trial"] = r.trial;
    rec["status"] = to_string(r.status);
    ordered_json metrics = ordered_json::object();
    for (const auto &[k, v] : r.metrics) metrics[k] = detail::number_or_null(v);
    rec["metrics"] = std::move(metrics);
    if (!r.detail.empty()) rec["detail"] = r.detail;
    rec["seed"] = r.seed;
    records.push_back(std::move(rec));
  }
  const std::size_t pass = report.count(CheckStatus::Pass);
  const std::size_t fail = report.count(CheckStatus::Fail);
  const std::size_t err = report.count(CheckStatus::Error);
  if (pass + fail + err != records.size()) {
    throw AssertionError("report summary does not match its records");
  }
  ordered_json summary = {{"total", records.size()},
                          {"passed", pass},
                          {"failed", fail},
                          {"errors", err},
                          {"timing", {{"wall_time_s", report.wall_time_s}}}};
  return ordered_json{{"format", kReportFormat},
                      {"config", std::move(cfg)},
                      {"records", std::move(records)},
                      {"summary", std::move(summary)}};
}

/// Report with the timing field removed, for byte-level comparison.
inline nlohmann::ordered_json strip_timing(nlohmann::ordered_json report) {
  if (report.contains("summary")) report["summary"].erase("timing");
  return report;
}

}  // namespace spinorlab
