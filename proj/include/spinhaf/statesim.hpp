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

#include <Eigen/Dense>
#include <complex>

#include "spinhaf/spinham.hpp"
#include "spinhaf/subsets.hpp"

namespace spinhaf {

using Complex = std::complex<double>;

/// Dense amplitude vector over computational basis states, indexed by the
/// spin bitmask (spin i <-> bit i-1).
using StateVector = Eigen::VectorXcd;

/// Hard cap on register width; the vector holds 2^num_spins amplitudes.
inline constexpr int kMaxSpins = 26;

/// Register width of a statevector; rejects non-power-of-two lengths.
int num_spins_of(const StateVector& psi);

/// |S> with the spins in the mask up and the rest down.
StateVector basis_state(int num_spins, Mask s);

/// H|psi>. The result is an unnormalized amplitude accumulator.
StateVector apply_h(const XXHamiltonian& h, const StateVector& psi);

/// <bra| H^k |ket> between two basis states. Real couplings give a real
/// amplitude; the imaginary residue is checked to be negligible.
Complex transition_amplitude(const XXHamiltonian& h, int k, Mask bra, Mask ket);

/// <S,S^c| H^N |0,0> on the 4N-spin register built from a 2N x 2N symmetric
/// matrix, with S placed in bits 0..2N-1 and S^c in bits 2N..4N-1.
double transition_amplitude_4n(const Eigen::Ref<const Eigen::MatrixXd>& a,
                               Mask s);

/// exp(-iHt)|psi>, exact: the commuting terms factorize into two-spin
/// rotations applied in any order.
StateVector evolve(const XXHamiltonian& h, double t, const StateVector& psi);

/// <bra|ket>.
Complex overlap(const StateVector& bra, const StateVector& ket);

}  // namespace spinhaf
