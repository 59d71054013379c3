// Copyright 2026 The spinhaf developers
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

#include "spinhaf/cli.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinhaf/circuits.hpp"
#include "spinhaf/estimate.hpp"
#include "spinhaf/io.hpp"
#include "spinhaf/matfun.hpp"
#include "spinhaf/targetstates.hpp"

namespace spinhaf {

namespace {

using nlohmann::json;

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad index '" + item + "' in subset list");
    }
    out.push_back(v);
  }
  return out;
}

int checked_pair_count(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  if (a.rows() != a.cols() || a.rows() == 0 || a.rows() % 2 != 0) {
    throw std::invalid_argument("matrix must be 2N x 2N with N >= 1");
  }
  return static_cast<int>(a.rows());
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

struct IdentityCheck {
  std::string name;
  bool pass = true;
  double max_residual = 0.0;
};

// Residual bookkeeping: relative on nonzero targets, absolute on zeros.
struct ResidualTracker {
  double rel = 0.0;
  double zero = 0.0;

  void expect(double actual, double target) {
    if (target == 0.0) {
      zero = std::max(zero, std::abs(actual));
    } else {
      rel = std::max(rel, std::abs(actual - target) / std::abs(target));
    }
  }

  IdentityCheck finish(std::string name) const {
    return {std::move(name), rel < 1e-9 && zero < 1e-12, std::max(rel, zero)};
  }
};

// Amplitude pattern of H1 powers: the weight-2k sector of H1^k |0> carries
// k! haf(A_S); sectors of odd weight or weight above 2k are unreachable and
// must vanish. Lower even sectors are populated by back-and-forth spin
// flips and are not pinned by the identity.
IdentityCheck check_hafnian_amplitudes(
    const Eigen::Ref<const Eigen::MatrixXd>& a) {
  const int dim = static_cast<int>(a.rows());
  const XXHamiltonian h1 = build_h1(a);
  const HafnianTable table(a);
  ResidualTracker res;
  StateVector vec = basis_state(dim, 0);
  for (int k = 0; k <= dim / 2; ++k) {
    if (k > 0) vec = apply_h(h1, vec);
    const double kfact = std::tgamma(k + 1.0);
    for (Eigen::Index m = 0; m < vec.size(); ++m) {
      const int weight = popcount(static_cast<Mask>(m));
      if (weight == 2 * k) {
        res.expect(vec[m].real(), kfact * table.value(static_cast<Mask>(m)));
      } else if (weight % 2 != 0 || weight > 2 * k) {
        res.expect(vec[m].real(), 0.0);
      }
    }
  }
  return res.finish("hafnian-amplitude");
}

IdentityCheck check_factorized_amplitudes(
    const Eigen::Ref<const Eigen::MatrixXd>& a, const StateVector& hn_vec) {
  const int dim = static_cast<int>(a.rows());
  const int n = dim / 2;
  const HafnianTable table(a);
  ResidualTracker res;
  for (int size = 0; size <= dim; size += 2) {
    const int k = size / 2;
    for_each_subset_of_size(dim, size, [&](Mask s) {
      const Mask index = s | ((full_mask(dim) & ~s) << dim);
      double diag = 1.0;
      for (int i = 1; i <= dim; ++i) {
        if (!(s & bit_of(i))) diag *= a(i - 1, i - 1);
      }
      const double expected = std::tgamma(n + 1.0) *
                              static_cast<double>(double_factorial(2 * (n - k) - 1)) *
                              diag * table.value(s);
      res.expect(hn_vec[static_cast<Eigen::Index>(index)].real(), expected);
    });
  }
  return res.finish("factorized-amplitude");
}

IdentityCheck check_phi1_overlap(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                 const StateVector& hn_vec) {
  const int n = static_cast<int>(a.rows()) / 2;
  ResidualTracker res;
  const double lhs = overlap(phi1_state(n), hn_vec).real();
  const double rhs =
      std::tgamma(n + 1.0) / norm_L(n).value * loop_hafnian(a);
  res.expect(lhs, rhs);
  return res.finish("phi1-overlap");
}

IdentityCheck check_truncated_phi1_overlap(
    const Eigen::Ref<const Eigen::MatrixXd>& a, const StateVector& hn_vec) {
  const int n = static_cast<int>(a.rows()) / 2;
  const int p = count_nonzero_diagonal(a);
  const int l = (p + 1) / 2;
  ResidualTracker res;
  const double lhs = overlap(phi1_state_truncated(n, p), hn_vec).real();
  const double rhs = std::tgamma(n + 1.0) / norm_L_truncated(n, l).value *
                     loop_hafnian(a);
  res.expect(lhs, rhs);
  return res.finish("truncated-phi1-overlap");
}

int cmd_matfun(const std::string& function, const std::string& matrix_path,
               bool with_oracle, std::ostream& out) {
  const Eigen::MatrixXd a = load_matrix_json(matrix_path);
  double value = 0.0;
  std::optional<double> oracle;
  if (function == "perm") {
    value = permanent(a);
    if (with_oracle) oracle = permanent_enum(a);
  } else if (function == "haf") {
    value = hafnian(a);
    if (with_oracle) oracle = hafnian_enum(a);
  } else {
    value = loop_hafnian(a);
    if (with_oracle) oracle = loop_hafnian_enum(a);
  }
  json doc;
  doc["value"] = value;
  if (oracle) {
    doc["oracle"] = *oracle;
    doc["rel_error"] =
        std::abs(value - *oracle) / std::max(std::abs(*oracle), 1e-300);
  }
  out << doc.dump() << "\n";
  return 0;
}

int cmd_amp(const std::string& matrix_path, int power, const std::string& bra,
            std::string model, std::ostream& out) {
  const Eigen::MatrixXd a = load_matrix_json(matrix_path);
  const int dim = checked_pair_count(a);
  if (power < 0) throw std::invalid_argument("--power must be nonnegative");
  if (model.empty()) {
    model = (count_nonzero_diagonal(a) == 0) ? "2n" : "4n";
  }
  const Mask s = mask_from_indices(parse_index_list(bra), dim);
  double value = 0.0;
  if (model == "2n") {
    value = transition_amplitude(build_h1(a), power, s, 0).real();
  } else {
    const Mask index = s | ((full_mask(dim) & ~s) << dim);
    if (2 * dim > kMaxSpins) {
      throw std::invalid_argument("4N register exceeds the spin cap");
    }
    value = transition_amplitude(build_full(a), power, index, 0).real();
  }
  json doc;
  doc["value"] = value;
  out << doc.dump() << "\n";
  return 0;
}

int cmd_identity_check(const std::string& matrix_path, std::ostream& out) {
  const Eigen::MatrixXd a = load_matrix_json(matrix_path);
  const int dim = checked_pair_count(a);
  if (dim > 10) {
    throw std::invalid_argument(
        "identity-check enumerates all subsets; limited to 2N <= 10");
  }
  const int n = dim / 2;

  StateVector hn_vec = basis_state(2 * dim, 0);
  const XXHamiltonian h = build_full(a);
  for (int step = 0; step < n; ++step) hn_vec = apply_h(h, hn_vec);

  std::vector<IdentityCheck> checks;
  checks.push_back(check_hafnian_amplitudes(a));
  checks.push_back(check_factorized_amplitudes(a, hn_vec));
  checks.push_back(check_phi1_overlap(a, hn_vec));
  checks.push_back(check_truncated_phi1_overlap(a, hn_vec));

  bool all_pass = true;
  json list = json::array();
  for (const IdentityCheck& c : checks) {
    all_pass = all_pass && c.pass;
    list.push_back({{"name", c.name},
                    {"pass", c.pass},
                    {"max_residual", c.max_residual}});
  }
  json doc;
  doc["all_pass"] = all_pass;
  doc["checks"] = std::move(list);
  out << doc.dump() << "\n";
  return all_pass ? 0 : 1;
}

int cmd_phi1(int n, std::optional<int> p, bool dump_state,
             const std::string& circuit_format, std::ostream& out) {
  if (dump_state) {
    const StateVector psi = p ? phi1_state_truncated(n, *p) : phi1_state(n);
    out << state_to_json(psi) << "\n";
    return 0;
  }
  if (p) {
    throw std::invalid_argument(
        "--p applies to --state only; the synthesized circuit prepares the "
        "untruncated state");
  }
  const Circuit c = phi1_circuit(n);
  const CircuitFormat fmt =
      (circuit_format == "json") ? CircuitFormat::Json : CircuitFormat::Qasm2;
  out << emit(c, fmt) << (fmt == CircuitFormat::Json ? "\n" : "");
  return 0;
}

int cmd_estimate(const std::string& matrix_path, std::optional<double> t,
                 std::optional<std::int64_t> shots, std::uint64_t seed,
                 std::ostream& out) {
  const Eigen::MatrixXd a = load_matrix_json(matrix_path);
  checked_pair_count(a);
  const double used_t = t ? *t : default_evolution_time(build_full(a));
  const EstimateReport report = lhaf_from_overlap(a, used_t);
  json doc;
  doc["t"] = report.t;
  doc["raw_overlap"] = complex_to_json(report.raw_overlap);
  doc["estimate"] = report.estimate;
  doc["imag_residue"] = report.imag_residue;
  doc["oracle"] = report.oracle;
  doc["rel_error"] = report.rel_error;
  if (shots) {
    const HadamardTestResult sampled =
        hadamard_test_sample(a, used_t, *shots, seed);
    doc["sampled"] = {{"re_estimate", sampled.re_estimate},
                      {"im_estimate", sampled.im_estimate},
                      {"stderr", sampled.std_error},
                      {"shots", sampled.shots},
                      {"seed", sampled.seed}};
  }
  out << doc.dump() << "\n";
  return 0;
}

int cmd_sample(const std::string& matrix_path, int weight,
               std::optional<double> t, std::ostream& out) {
  const Eigen::MatrixXd a = load_matrix_json(matrix_path);
  checked_pair_count(a);
  if (weight < 2 || weight % 2 != 0) {
    throw std::invalid_argument("--weight must be a positive even integer 2K");
  }
  const double used_t = t ? *t : default_evolution_time(build_h1(a));
  const SubmatrixDistribution dist =
      submatrix_distribution(a, used_t, weight / 2);
  json probs = json::object();
  for (const auto& [mask, p] : dist.probs) probs[std::to_string(mask)] = p;
  json doc;
  doc["k"] = dist.k;
  doc["t"] = dist.t;
  doc["probs"] = std::move(probs);
  if (dist.degenerate) doc["degenerate"] = true;
  out << doc.dump() << "\n";
  return 0;
}

int cmd_evolve_circuit(const std::string& matrix_path, double t,
                       const std::string& format, std::ostream& out) {
  const Eigen::MatrixXd a = load_matrix_json(matrix_path);
  checked_pair_count(a);
  const XXHamiltonian h =
      (count_nonzero_diagonal(a) == 0) ? build_h1(a) : build_full(a);
  const CircuitFormat fmt =
      (format == "json") ? CircuitFormat::Json : CircuitFormat::Qasm2;
  out << emit(evolution_circuit(h, t), fmt)
      << (fmt == CircuitFormat::Json ? "\n" : "");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Spin-dynamics encodings of permanents, hafnians and loop-hafnians"};
  app.require_subcommand(1);

  // matfun
  std::string mf_function, mf_matrix;
  bool mf_oracle = false;
  auto* mf = app.add_subcommand("matfun", "Evaluate a matrix function");
  mf->add_option("function", mf_function, "One of perm|haf|lhaf")
      ->required()
      ->check(CLI::IsMember({"perm", "haf", "lhaf"}));
  mf->add_option("--matrix", mf_matrix, "Matrix JSON file")->required();
  mf->add_flag("--oracle", mf_oracle, "Also run the enumeration oracle");

  // amp
  std::string amp_matrix, amp_bra, amp_model;
  int amp_power = 0;
  auto* amp = app.add_subcommand("amp", "Transition amplitude of H^k");
  amp->add_option("--matrix", amp_matrix)->required();
  amp->add_option("--power", amp_power, "Power k")->required();
  amp->add_option("--bra", amp_bra, "Up-spin subset, e.g. \"1,2\"")->required();
  amp->add_option("--model", amp_model, "2n or 4n (default inferred)")
      ->check(CLI::IsMember({"2n", "4n"}));

  // identity-check
  std::string idc_matrix;
  auto* idc = app.add_subcommand("identity-check",
                                 "Verify the amplitude identities on a matrix");
  idc->add_option("--matrix", idc_matrix)->required();

  // phi1
  int phi1_n = 0;
  int phi1_p = -1;
  bool phi1_state_flag = false;
  std::string phi1_circuit_fmt;
  auto* ph = app.add_subcommand("phi1", "Target state or its preparation circuit");
  ph->add_option("--n", phi1_n, "N (register has 4N qubits)")->required();
  auto* ph_p = ph->add_option("--p", phi1_p, "Nonzero-diagonal count for truncation");
  auto* ph_state = ph->add_flag("--state", phi1_state_flag, "Dump the state");
  auto* ph_circ = ph->add_option("--circuit", phi1_circuit_fmt,
                                 "Emit the circuit as json or qasm2")
                      ->check(CLI::IsMember({"json", "qasm2"}));
  ph_state->excludes(ph_circ);

  // estimate
  std::string est_matrix;
  double est_t = 0.0;
  std::int64_t est_shots = 0;
  std::uint64_t est_seed = 0;
  auto* est = app.add_subcommand("estimate", "Loop-hafnian from a short-time overlap");
  est->add_option("--matrix", est_matrix)->required();
  auto* est_t_opt = est->add_option("--t", est_t, "Propagation time");
  auto* est_shots_opt = est->add_option("--shots", est_shots, "Hadamard-test shots");
  est->add_option("--seed", est_seed, "RNG seed for sampling");

  // sample
  std::string smp_matrix;
  int smp_weight = 0;
  double smp_t = 0.0;
  auto* smp = app.add_subcommand("sample", "Fixed-weight submatrix distribution");
  smp->add_option("--matrix", smp_matrix)->required();
  smp->add_option("--weight", smp_weight, "Hamming weight 2K")->required();
  auto* smp_t_opt = smp->add_option("--t", smp_t, "Propagation time");

  // evolve-circuit
  std::string evc_matrix, evc_fmt;
  double evc_t = 0.0;
  auto* evc = app.add_subcommand("evolve-circuit", "Exact exp(-iHt) circuit");
  evc->add_option("--matrix", evc_matrix)->required();
  evc->add_option("--t", evc_t, "Propagation time")->required();
  evc->add_option("--emit", evc_fmt, "json or qasm2")
      ->required()
      ->check(CLI::IsMember({"json", "qasm2"}));

  std::vector<const char*> argv;
  argv.push_back("spinhaf");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*mf) return cmd_matfun(mf_function, mf_matrix, mf_oracle, out);
    if (*amp) return cmd_amp(amp_matrix, amp_power, amp_bra, amp_model, out);
    if (*idc) return cmd_identity_check(idc_matrix, out);
    if (*ph) {
      if (!phi1_state_flag && phi1_circuit_fmt.empty()) {
        throw std::invalid_argument("phi1 needs --state or --circuit");
      }
      return cmd_phi1(phi1_n,
                      (*ph_p) ? std::optional<int>(phi1_p) : std::nullopt,
                      phi1_state_flag, phi1_circuit_fmt, out);
    }
    if (*est) {
      return cmd_estimate(
          est_matrix,
          (*est_t_opt) ? std::optional<double>(est_t) : std::nullopt,
          (*est_shots_opt) ? std::optional<std::int64_t>(est_shots)
                           : std::nullopt,
          est_seed, out);
    }
    if (*smp) {
      return cmd_sample(smp_matrix, smp_weight,
                        (*smp_t_opt) ? std::optional<double>(smp_t)
                                     : std::nullopt,
                        out);
    }
    if (*evc) return cmd_evolve_circuit(evc_matrix, evc_t, evc_fmt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace spinhaf
