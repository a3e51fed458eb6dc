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

// Command-line front end.
//
// Exit codes: 0 success (for `verify`: every check passed), 1 at least one
// check failed, 2 operational error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinorlab/spinorlab.hpp"

namespace {

using namespace spinorlab;
using nlohmann::ordered_json;

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

std::uint64_t default_seed() {
  if (const char *env = std::getenv("SPINORLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception &) {
      throw ConfigError(std::string("SPINORLAB_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

struct Common {
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol_rank;
  bool json = false;

  std::uint64_t resolved_seed() const { return seed ? *seed : default_seed(); }
  Tolerances tolerances() const {
    Tolerances t;
    if (tol_rank) t.rank = *tol_rank;
    return t;
  }
};

Spinor builtin_spinor(const std::string &name, int n, std::uint64_t seed) {
  if (name == "psi1") return psi_pure(n);
  if (name == "psi2") return psi_totally_impure(n);
  if (name == "random") {
    SeededSampler s(seed);
    return random_spinor(SpinorSpace(n), s);
  }
  throw ConfigError("unknown builtin spinor '" + name + "' (expected psi1, psi2, random)");
}

Spinor input_spinor(const std::string &file, const std::string &builtin, const Common &c) {
  if (!file.empty() && !builtin.empty()) throw ConfigError("give either --file or --builtin");
  if (!file.empty()) return load_spinor(file);
  if (builtin.empty()) throw ConfigError("one of --file or --builtin is required");
  if (!c.n) throw ConfigError("--builtin needs --n");
  return builtin_spinor(builtin, *c.n, c.resolved_seed());
}

ordered_json vector_json(const Eigen::VectorXd &v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

ordered_json matrix_json(const Eigen::MatrixXd &m) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) a.push_back(vector_json(m.col(c)));
  return a;
}

int cmd_classify(const std::string &file, const std::string &builtin, const Common &c) {
  const Spinor psi = input_spinor(file, builtin, c);
  const Tolerances tol = c.tolerances();
  const Classification cls = classify(psi, tol);
  const NullityReport rep = nullity(psi, tol);

  if (cls.tag == PurityClass::TotallyImpure) {
    std::cout << to_string(cls.tag) << '\n';
  } else {
    std::cout << to_string(cls.tag) << ", rank " << cls.rank << '\n';
  }
  std::cout << "  n = " << psi.space().n() << ", nullity = " << rep.nullity
            << ", rank gap = " << rep.rank_gap << '\n';

  ordered_json machine = {{"n", psi.space().n()},
                          {"class", to_string(cls.tag)},
                          {"rank", cls.rank},
                          {"nullity", rep.nullity},
                          {"impure", cls.impure()},
                          {"singular_values", rep.singular_values}};
  if (std::isfinite(rep.rank_gap)) {
    machine["rank_gap"] = rep.rank_gap;
  } else {
    machine["rank_gap"] = nullptr;
  }
  if (rep.nullity > 0) {
    const CRFrame f = cr_frame(psi, tol);
    std::cout << "  dim D = " << f.d_basis.cols() << ", dim D^perp = " << f.dperp_basis.cols()
              << ", |xi| = " << f.xi.norm() << ", J residual = " << f.j_residual << '\n';
    machine["cr_frame"] = {{"d_basis", matrix_json(f.d_basis)},
                           {"j_matrix", matrix_json(f.j_matrix)},
                           {"dperp_basis", matrix_json(f.dperp_basis)},
                           {"xi", vector_json(f.xi)},
                           {"j_residual", f.j_residual}};
  } else {
    machine["xi"] = vector_json(xi_vector(psi, tol));
  }
  if (c.json) std::cout << machine.dump(2) << '\n';
  return 0;
}

int cmd_verify(const std::vector<std::string> &suites, int n_min, int n_max, int trials,
               const std::string &out, const Common &c) {
  SuiteConfig cfg;
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.trials = trials;
  cfg.seed = c.resolved_seed();
  cfg.tolerances = c.tolerances();
  for (const auto &s : suites) {
    if (s == "all") {
      cfg.suites = all_suites();
      break;
    }
    cfg.suites.push_back(s);
  }
  const CheckReport report = run_suite(cfg);
  const ordered_json doc = report_to_json(report);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw ConfigError("cannot write report to '" + out + "'");
    f << doc.dump(2) << '\n';
  }
  if (c.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto &name : cfg.suites) {
      std::size_t total = 0, bad = 0;
      for (const auto &r : report.records) {
        if (r.suite != name) continue;
        ++total;
        if (r.status != CheckStatus::Pass) {
          ++bad;
          if (bad <= 5) {
            std::cout << "  " << to_string(r.status) << ": " << r.suite << '/' << r.check
                      << " n=" << r.n << " trial=" << r.trial << ": " << r.detail << '\n';
          }
        }
      }
      std::cout << (bad == 0 ? "PASS " : "FAIL ") << name << ": " << (total - bad) << '/'
                << total << " checks\n";
    }
    std::cout << "summary: " << report.count(CheckStatus::Pass) << " passed, "
              << report.count(CheckStatus::Fail) << " failed, "
              << report.count(CheckStatus::Error) << " errors in " << report.wall_time_s
              << " s\n";
  }
  return report.all_passed() ? 0 : kExitFailed;
}

int cmd_spectrum(const Common &c) {
  if (!c.n) throw ConfigError("spectrum needs --n");
  if (*c.n % 2 != 0) throw ParityError("the Kaehler form needs even n");
  const int m = *c.n / 2;
  const KaehlerSpectrum spec = kaehler_spectrum(standard_j(m));
  ordered_json levels = ordered_json::array();
  for (const auto &lvl : spec.levels) {
    if (!c.json) {
      std::cout << "r=" << lvl.r << "  eigenvalue " << lvl.eigenvalue.imag() << "i"
                << "  multiplicity " << lvl.multiplicity << "  residual " << lvl.max_residual
                << '\n';
    }
    levels.push_back({{"r", lvl.r},
                      {"eigenvalue_imag", lvl.eigenvalue.imag()},
                      {"multiplicity", lvl.multiplicity},
                      {"max_residual", lvl.max_residual}});
  }
  if (c.json) std::cout << ordered_json{{"m", m}, {"levels", levels}}.dump(2) << '\n';
  return 0;
}

int cmd_construct(std::optional<int> target, const std::string &builtin, const std::string &out,
                  const Common &c) {
  if (!c.n) throw ConfigError("construct needs --n");
  Spinor psi = [&] {
    if (target) {
      if (!builtin.empty()) throw ConfigError("give either --nullity or --builtin");
      return construct_with_nullity(*c.n, *target, c.tolerances());
    }
    if (builtin.empty()) throw ConfigError("construct needs --nullity or --builtin");
    return builtin_spinor(builtin, *c.n, c.resolved_seed());
  }();
  if (out.empty()) {
    std::cout << spinor_to_json(psi);
  } else {
    save_spinor(psi, out);
    std::cerr << "wrote " << out << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"spinorlab: spinor nullity, CR data and Kaehler spectra"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--n", common.n, "ambient dimension");
    sub->add_option("--seed", common.seed, "base seed (default: $SPINORLAB_SEED or 0)");
    sub->add_option("--tol-rank", common.tol_rank, "relative singular-value cutoff");
    sub->add_flag("--json", common.json, "machine-readable output");
  };

  std::string file, builtin, out;
  auto *classify_cmd = app.add_subcommand("classify", "classify a spinor and print its CR data");
  add_common(classify_cmd);
  classify_cmd->add_option("--file", file, "spinor file");
  classify_cmd->add_option("--builtin", builtin, "psi1, psi2 or random");

  std::vector<std::string> suites{"all"};
  int n_min = 2, n_max = 12, trials = 100;
  auto *verify_cmd = app.add_subcommand("verify", "run verification suites");
  add_common(verify_cmd);
  verify_cmd->add_option("--suite", suites, "suite name or 'all' (repeatable)");
  verify_cmd->add_option("--nmin", n_min, "smallest dimension");
  verify_cmd->add_option("--nmax", n_max, "largest dimension");
  verify_cmd->add_option("--trials", trials, "random trials per suite and dimension");
  verify_cmd->add_option("--out", out, "report file");

  auto *spectrum_cmd = app.add_subcommand("spectrum", "Kaehler-form spectrum for even n");
  add_common(spectrum_cmd);

  std::optional<int> target;
  auto *construct_cmd = app.add_subcommand("construct", "write a spinor file");
  add_common(construct_cmd);
  construct_cmd->add_option("--nullity", target, "prescribed nullity");
  construct_cmd->add_option("--builtin", builtin, "psi1, psi2 or random");
  construct_cmd->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (common.n && verify_cmd->parsed()) n_min = n_max = *common.n;
    if (classify_cmd->parsed()) return cmd_classify(file, builtin, common);
    if (verify_cmd->parsed()) return cmd_verify(suites, n_min, n_max, trials, out, common);
    if (spectrum_cmd->parsed()) return cmd_spectrum(common);
    if (construct_cmd->parsed()) return cmd_construct(target, builtin, out, common);
  } catch (const Error &e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
