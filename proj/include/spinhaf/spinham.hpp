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
#include <vector>

namespace spinhaf {

/// One commuting X_i X_j coupling. Spin indices are 1-based with i < j.
struct XXTerm {
  int i;
  int j;
  double coeff;

  friend bool operator==(const XXTerm&, const XXTerm&) = default;
};

/// A sum of pairwise-commuting two-spin XX couplings. Terms are unique per
/// unordered pair and immutable once built.
struct XXHamiltonian {
  int num_spins = 0;
  std::vector<XXTerm> terms;
};

/// Couplings A_ij X_i X_j over spins 1..2N, one term per unordered pair,
/// zero coefficients dropped.
XXHamiltonian build_h1(const Eigen::Ref<const Eigen::MatrixXd>& a);

/// Couplings A_ii A_jj X_{2N+i} X_{2N+j} over spins 2N+1..4N (num_spins is
/// 4N), zero coefficients dropped.
XXHamiltonian build_h2(const Eigen::Ref<const Eigen::MatrixXd>& a);

/// Union of build_h1 and build_h2 on a 4N-spin register.
XXHamiltonian build_full(const Eigen::Ref<const Eigen::MatrixXd>& a);

/// Sum of |coeff| over all terms.
double one_norm(const XXHamiltonian& h);

/// Same term set viewed on a wider register (e.g. H1 embedded in 4N spins).
XXHamiltonian widen(const XXHamiltonian& h, int num_spins);

}  // namespace spinhaf
