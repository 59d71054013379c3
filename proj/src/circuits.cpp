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

#include "spinhaf/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "spinhaf/targetstates.hpp"

namespace spinhaf {

namespace {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::Rxx: return "RXX";
    case GateKind::Ry: return "RY";
    case GateKind::Cry: return "CRY";
    case GateKind::Cnot: return "CNOT";
    case GateKind::X: return "X";
  }
  throw std::logic_error("unknown gate kind");
}

GateKind kind_from_name(const std::string& name) {
  if (name == "RXX") return GateKind::Rxx;
  if (name == "RY") return GateKind::Ry;
  if (name == "CRY") return GateKind::Cry;
  if (name == "CNOT") return GateKind::Cnot;
  if (name == "X") return GateKind::X;
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

bool has_angle(GateKind k) {
  return k == GateKind::Rxx || k == GateKind::Ry || k == GateKind::Cry;
}

std::string format_angle(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// In-place single- and two-qubit kernels. Basis index convention: qubit i
// lives on bit i-1.

void kernel_x(StateVector& psi, int q) {
  const Eigen::Index bit = Eigen::Index{1} << (q - 1);
  for (Eigen::Index m = 0; m < psi.size(); ++m) {
    if (!(m & bit)) std::swap(psi[m], psi[m | bit]);
  }
}

void kernel_ry(StateVector& psi, double theta, int q, Eigen::Index ctrl_bit) {
  const Eigen::Index bit = Eigen::Index{1} << (q - 1);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  for (Eigen::Index m = 0; m < psi.size(); ++m) {
    if ((m & bit) || (m & ctrl_bit) != ctrl_bit) continue;
    const Complex u = psi[m];
    const Complex v = psi[m | bit];
    psi[m] = c * u - s * v;
    psi[m | bit] = s * u + c * v;
  }
}

void kernel_cnot(StateVector& psi, int ctrl, int tgt) {
  const Eigen::Index cbit = Eigen::Index{1} << (ctrl - 1);
  const Eigen::Index tbit = Eigen::Index{1} << (tgt - 1);
  for (Eigen::Index m = 0; m < psi.size(); ++m) {
    if ((m & cbit) && !(m & tbit)) std::swap(psi[m], psi[m | tbit]);
  }
}

void kernel_rxx(StateVector& psi, double theta, int qa, int qb) {
  const Eigen::Index flip =
      (Eigen::Index{1} << (qa - 1)) | (Eigen::Index{1} << (qb - 1));
  const Eigen::Index marker = Eigen::Index{1} << (std::max(qa, qb) - 1);
  const double c = std::cos(theta / 2.0);
  const Complex mis(0.0, -std::sin(theta / 2.0));
  for (Eigen::Index m = 0; m < psi.size(); ++m) {
    if (m & marker) continue;
    const Eigen::Index p = m ^ flip;
    const Complex u = psi[m];
    const Complex v = psi[p];
    psi[m] = c * u + mis * v;
    psi[p] = mis * u + c * v;
  }
}

void apply_gate(StateVector& psi, const Gate& g) {
  switch (g.kind) {
    case GateKind::Rxx: kernel_rxx(psi, g.theta, g.q0, g.q1); return;
    case GateKind::Ry: kernel_ry(psi, g.theta, g.q0, 0); return;
    case GateKind::Cry:
      kernel_ry(psi, g.theta, g.q1, Eigen::Index{1} << (g.q0 - 1));
      return;
    case GateKind::Cnot: kernel_cnot(psi, g.q0, g.q1); return;
    case GateKind::X: kernel_x(psi, g.q0); return;
  }
}

// Doubly controlled RY via the standard halved-angle sandwich; only CRY and
// CNOT are needed.
void append_ccry(Circuit& c, double theta, int ctrl_a, int ctrl_b, int tgt) {
  c.append(Gate::cry(theta / 2.0, ctrl_b, tgt));
  c.append(Gate::cnot(ctrl_a, ctrl_b));
  c.append(Gate::cry(-theta / 2.0, ctrl_b, tgt));
  c.append(Gate::cnot(ctrl_a, ctrl_b));
  c.append(Gate::cry(theta / 2.0, ctrl_a, tgt));
}

}  // namespace

void Circuit::append(const Gate& g) {
  const int ops = g.num_operands();
  if (g.q0 < 1 || g.q0 > num_qubits ||
      (ops == 2 && (g.q1 < 1 || g.q1 > num_qubits))) {
    throw std::invalid_argument("gate operand outside register 1.." +
                                std::to_string(num_qubits));
  }
  if (ops == 2 && g.q0 == g.q1) {
    throw std::invalid_argument("gate operands must be distinct qubits");
  }
  if (!std::isfinite(g.theta)) {
    throw std::invalid_argument("gate angle must be finite");
  }
  gates.push_back(g);
}

StateVector apply_circuit(const Circuit& c, const StateVector& psi) {
  if (psi.size() != (Eigen::Index{1} << c.num_qubits)) {
    throw std::invalid_argument("apply_circuit: statevector length " +
                                std::to_string(psi.size()) +
                                " does not match a " +
                                std::to_string(c.num_qubits) +
                                "-qubit circuit");
  }
  StateVector out = psi;
  for (const Gate& g : c.gates) apply_gate(out, g);
  return out;
}

Circuit evolution_circuit(const XXHamiltonian& h, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("evolution_circuit: time must be finite");
  }
  Circuit c(h.num_spins);
  for (const XXTerm& term : h.terms) {
    c.append(Gate::rxx(2.0 * term.coeff * t, term.i, term.j));
  }
  return c;
}

double theta_m(int n, int m) {
  if (m < 0 || m > n - 1) {
    throw std::invalid_argument("theta_m: m out of range 0..N-1");
  }
  const auto tier = [n](int k) {
    const double dfact =
        static_cast<double>(double_factorial(2 * (n - k) - 1));
    return static_cast<double>(binomial(2 * n, 2 * k)) / (dfact * dfact);
  };
  double tail = 0.0;
  for (int k = m; k <= n; ++k) tail += tier(k);
  const double ratio = std::sqrt(tier(m) / tail);
  return 2.0 * std::acos(std::clamp(ratio, -1.0, 1.0));
}

Circuit v_circuit(int n) {
  if (n < 1) throw std::invalid_argument("v_circuit: N must be positive");
  Circuit c(2 * n);
  for (int m = 0; m <= n - 1; ++m) {
    const int tgt = 2 * n - 2 * m;
    if (m == 0) {
      c.append(Gate::ry(theta_m(n, 0), tgt));  // control sits off-register
    } else {
      c.append(Gate::cry(theta_m(n, m), tgt + 1, tgt));
    }
    c.append(Gate::cnot(tgt, tgt - 1));
  }
  return c;
}

Circuit dicke_unitary_circuit(int n) {
  if (n < 1) {
    throw std::invalid_argument("dicke_unitary_circuit: n must be positive");
  }
  Circuit c(n);
  // Split-and-cyclic-shift blocks: on qubits 1..m, an input 1-run of length
  // l anchored at qubit m either stays (amplitude sqrt(l/m)) or shifts left
  // by one with its last qubit cleared (amplitude sqrt((m-l)/m)).
  for (int m = n; m >= 2; --m) {
    c.append(Gate::cnot(m, m - 1));
    c.append(Gate::cry(-2.0 * std::acos(std::sqrt(1.0 / m)), m - 1, m));
    c.append(Gate::cnot(m, m - 1));
    for (int l = 2; l <= m - 1; ++l) {
      const double angle =
          -2.0 * std::acos(std::sqrt(static_cast<double>(l) / m));
      c.append(Gate::cnot(m, m - l));
      append_ccry(c, angle, m - l, m - l + 1, m);
      c.append(Gate::cnot(m, m - l));
    }
  }
  return c;
}

Circuit phi1_circuit(int n) {
  if (n < 1) throw std::invalid_argument("phi1_circuit: N must be positive");
  if (4 * n > kMaxSpins) {
    throw std::invalid_argument("phi1_circuit: register width above the cap");
  }
  Circuit c(4 * n);
  for (int i = 2 * n + 1; i <= 4 * n; ++i) c.append(Gate::x(i));
  for (const Gate& g : v_circuit(n).gates) c.append(g);
  for (const Gate& g : dicke_unitary_circuit(2 * n).gates) c.append(g);
  for (int i = 1; i <= 2 * n; ++i) c.append(Gate::cnot(i, 2 * n + i));
  return c;
}

std::string emit(const Circuit& c, CircuitFormat format) {
  if (format == CircuitFormat::Json) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate& g : c.gates) {
      nlohmann::json item;
      item["kind"] = kind_name(g.kind);
      item["qubits"] = (g.num_operands() == 2)
                           ? nlohmann::json::array({g.q0, g.q1})
                           : nlohmann::json::array({g.q0});
      if (has_angle(g.kind)) item["theta"] = g.theta;
      gates.push_back(std::move(item));
    }
    nlohmann::json doc;
    doc["num_qubits"] = c.num_qubits;
    doc["gates"] = std::move(gates);
    return doc.dump();
  }

  // OpenQASM 2.0. qelib1 has no rxx, so a local definition (exact, via the
  // H-conjugated ZZ rotation) keeps the file self-contained. CRY is expanded
  // with the two-CNOT identity. Qubit i maps to q[i-1].
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "gate rxx(theta) a,b { h a; h b; cx a,b; rz(theta) b; cx a,b; h a; h b; }\n";
  out += "qreg q[" + std::to_string(std::max(c.num_qubits, 1)) + "];\n";
  const auto q = [](int i) { return "q[" + std::to_string(i - 1) + "]"; };
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Rxx:
        out += "rxx(" + format_angle(g.theta) + ") " + q(g.q0) + "," + q(g.q1) + ";\n";
        break;
      case GateKind::Ry:
        out += "ry(" + format_angle(g.theta) + ") " + q(g.q0) + ";\n";
        break;
      case GateKind::Cry:
        out += "ry(" + format_angle(g.theta / 2.0) + ") " + q(g.q1) + ";\n";
        out += "cx " + q(g.q0) + "," + q(g.q1) + ";\n";
        out += "ry(" + format_angle(-g.theta / 2.0) + ") " + q(g.q1) + ";\n";
        out += "cx " + q(g.q0) + "," + q(g.q1) + ";\n";
        break;
      case GateKind::Cnot:
        out += "cx " + q(g.q0) + "," + q(g.q1) + ";\n";
        break;
      case GateKind::X:
        out += "x " + q(g.q0) + ";\n";
        break;
    }
  }
  return out;
}

Circuit parse_circuit_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("num_qubits") || !doc.contains("gates")) {
    throw std::invalid_argument("circuit JSON: expected num_qubits and gates");
  }
  Circuit c(doc.at("num_qubits").get<int>());
  for (const auto& item : doc.at("gates")) {
    const GateKind kind = kind_from_name(item.at("kind").get<std::string>());
    const auto& qubits = item.at("qubits");
    Gate g{kind, 0, 0, 0.0};
    g.q0 = qubits.at(0).get<int>();
    if (g.num_operands() == 2) g.q1 = qubits.at(1).get<int>();
    if (has_angle(kind)) g.theta = item.at("theta").get<double>();
    c.append(g);
  }
  return c;
}

}  // namespace spinhaf
