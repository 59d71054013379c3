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

#include "spinhaf/statesim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinhaf {

namespace {

void require_same_width(const XXHamiltonian& h, const StateVector& psi) {
  if (psi.size() != (Eigen::Index{1} << h.num_spins)) {
    throw std::invalid_argument(
        "statevector length " + std::to_string(psi.size()) +
        " does not match a " + std::to_string(h.num_spins) +
        "-spin Hamiltonian");
  }
}

}  // namespace

int num_spins_of(const StateVector& psi) {
  const auto len = static_cast<std::uint64_t>(psi.size());
  if (len == 0 || (len & (len - 1)) != 0) {
    throw std::invalid_argument("statevector length is not a power of two");
  }
  return std::countr_zero(len);
}

StateVector basis_state(int num_spins, Mask s) {
  if (num_spins < 0 || num_spins > kMaxSpins) {
    throw std::invalid_argument("basis_state: register width out of range");
  }
  if (s >= (Mask{1} << num_spins)) {
    throw std::invalid_argument("basis_state: mask out of range for " +
                                std::to_string(num_spins) + " spins");
  }
  StateVector psi = StateVector::Zero(Eigen::Index{1} << num_spins);
  psi[static_cast<Eigen::Index>(s)] = 1.0;
  return psi;
}

StateVector apply_h(const XXHamiltonian& h, const StateVector& psi) {
  require_same_width(h, psi);
  StateVector out = StateVector::Zero(psi.size());
  for (const XXTerm& t : h.terms) {
    const Eigen::Index flip =
        static_cast<Eigen::Index>(bit_of(t.i) | bit_of(t.j));
    for (Eigen::Index m = 0; m < psi.size(); ++m) {
      out[m] += t.coeff * psi[m ^ flip];
    }
  }
  return out;
}

Complex transition_amplitude(const XXHamiltonian& h, int k, Mask bra,
                             Mask ket) {
  if (k < 0) throw std::invalid_argument("transition_amplitude: negative power");
  StateVector psi = basis_state(h.num_spins, ket);
  for (int step = 0; step < k; ++step) psi = apply_h(h, psi);
  if (bra >= (Mask{1} << h.num_spins)) {
    throw std::invalid_argument("transition_amplitude: bra mask out of range");
  }
  const Complex amp = psi[static_cast<Eigen::Index>(bra)];
  if (std::abs(amp.imag()) >= 1e-12 * std::max(1.0, std::abs(amp.real()))) {
    throw std::logic_error(
        "transition_amplitude: unexpected imaginary part for real couplings");
  }
  return amp;
}

double transition_amplitude_4n(const Eigen::Ref<const Eigen::MatrixXd>& a,
                               Mask s) {
  const int dim = static_cast<int>(a.rows());  // 2N
  if (popcount(s) % 2 != 0) {
    throw std::invalid_argument(
        "transition_amplitude_4n: |S| must be even, got " +
        std::to_string(popcount(s)));
  }
  if (s >= (Mask{1} << dim)) {
    throw std::invalid_argument("transition_amplitude_4n: mask out of range");
  }
  const XXHamiltonian h = build_full(a);
  const Mask complement = full_mask(dim) & ~s;
  const Mask bra = s | (complement << dim);
  return transition_amplitude(h, dim / 2, bra, Mask{0}).real();
}

StateVector evolve(const XXHamiltonian& h, double t, const StateVector& psi) {
  require_same_width(h, psi);
  if (!std::isfinite(t)) {
    throw std::invalid_argument("evolve: time must be finite");
  }
  StateVector out = psi;
  for (const XXTerm& term : h.terms) {
    const double angle = term.coeff * t;
    const double c = std::cos(angle);
    const Complex mis(0.0, -std::sin(angle));
    const Eigen::Index flip =
        static_cast<Eigen::Index>(bit_of(term.i) | bit_of(term.j));
    const Eigen::Index hi = static_cast<Eigen::Index>(bit_of(term.j));
    for (Eigen::Index m = 0; m < out.size(); ++m) {
      if (m & hi) continue;  // visit each (m, m^flip) pair once
      const Eigen::Index p = m ^ flip;
      const Complex u = out[m];
      const Complex v = out[p];
      out[m] = c * u + mis * v;
      out[p] = mis * u + c * v;
    }
  }
  return out;
}

Complex overlap(const StateVector& bra, const StateVector& ket) {
  if (bra.size() != ket.size()) {
    throw std::invalid_argument("overlap: dimension mismatch");
  }
  return bra.dot(ket);
}

}  // namespace spinhaf
