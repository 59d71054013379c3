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
#include <string>

#include "spinhaf/spinham.hpp"
#include "spinhaf/statesim.hpp"

namespace spinhaf {

/// Matrix file schema: {"n": <int>, "entries": [<row-major reals>]}.
/// Symmetry is required exactly as stored; the worst offending entry pair is
/// named in the rejection message.
Eigen::MatrixXd parse_matrix_json(const std::string& text);
Eigen::MatrixXd load_matrix_json(const std::string& path);
std::string matrix_to_json(const Eigen::Ref<const Eigen::MatrixXd>& a);

/// {"num_spins": n, "terms": [[i, j, coeff], ...]} with 1-based spins.
std::string hamiltonian_to_json(const XXHamiltonian& h);

/// Sparse amplitude dump: {"num_qubits": n, "amps": {"<mask>": [re, im]}}.
std::string state_to_json(const StateVector& psi);

}  // namespace spinhaf
