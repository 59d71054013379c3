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

#pragma once

#include <string>
#include <vector>

#include "spinhaf/statesim.hpp"

namespace spinhaf {

/// Gate set: RXX(t) = exp(-i t XX / 2), RY(t) = exp(-i t Y / 2), CRY applies
/// RY on the target when the control is |1>, plus CNOT and X. Qubit indices
/// are 1-based.
enum class GateKind { Rxx, Ry, Cry, Cnot, X };

struct Gate {
  GateKind kind;
  int q0 = 0;  // target for single-qubit gates, control for CRY/CNOT
  int q1 = 0;  // second operand, 0 when unused
  double theta = 0.0;

  static Gate rxx(double theta, int i, int j) { return {GateKind::Rxx, i, j, theta}; }
  static Gate ry(double theta, int i) { return {GateKind::Ry, i, 0, theta}; }
  static Gate cry(double theta, int ctrl, int tgt) { return {GateKind::Cry, ctrl, tgt, theta}; }
  static Gate cnot(int ctrl, int tgt) { return {GateKind::Cnot, ctrl, tgt, 0.0}; }
  static Gate x(int i) { return {GateKind::X, i, 0, 0.0}; }

  int num_operands() const {
    return (kind == GateKind::Ry || kind == GateKind::X) ? 1 : 2;
  }
};

/// Ordered gate list, applied left to right.
struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  explicit Circuit(int width = 0) : num_qubits(width) {}

  /// Appends after validating operands against the register width.
  void append(const Gate& g);
};

/// Runs the circuit on a statevector; exact and norm preserving.
StateVector apply_circuit(const Circuit& c, const StateVector& psi);

/// exp(-iHt) as one RXX(2 c t) gate per coupling; exact since all terms
/// commute.
Circuit evolution_circuit(const XXHamiltonian& h, double t);

/// Rotation angle of the m-th rung of the amplitude ladder behind
/// phi1_state(N); the arccos argument is clamped against rounding.
double theta_m(int n, int m);

/// 2N-qubit ladder whose output on |0...0> carries the phi1 tier amplitudes
/// on the suffix-ones states |0^{2(N-k)} 1^{2k}>.
Circuit v_circuit(int n);

/// n-qubit unitary mapping |0^{n-w} 1^w> to the Dicke state of weight w for
/// every w simultaneously, built from split-and-cyclic-shift blocks.
Circuit dicke_unitary_circuit(int n);

/// Full 4N-qubit preparation of phi1_state(N) from |0...0>.
Circuit phi1_circuit(int n);

enum class CircuitFormat { Json, Qasm2 };

/// Serializes to the circuit JSON schema or to OpenQASM 2.0 (CRY expanded
/// with the two-CNOT identity, RXX emitted as a locally defined gate).
std::string emit(const Circuit& c, CircuitFormat format);

/// Parses the JSON produced by emit.
Circuit parse_circuit_json(const std::string& text);

}  // namespace spinhaf
