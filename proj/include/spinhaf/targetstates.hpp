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
#include <cstdint>

#include "spinhaf/statesim.hpp"

namespace spinhaf {

/// m!! for odd m >= -1 (also accepts 0), with (-1)!! = 0!! = 1.
std::int64_t double_factorial(int m);

/// Exact binomial coefficient.
std::int64_t binomial(int n, int k);

/// L_{N,l} = sqrt(sum_{k=0..l} C(2N,2k) / [(2k-1)!!]^2); l = N is the
/// untruncated normalization L_N.
struct NormalizationFactor {
  double value;
  int n;
  int l;
};

NormalizationFactor norm_L(int n);
NormalizationFactor norm_L_truncated(int n, int l);

/// The 4N-spin target state pairing every even subset S with its complement:
/// (1/L_N) sum_k (2(N-k)-1)!!^{-1} sum_{|S|=2k} |S,S^c>.
StateVector phi1_state(int n);

/// Same state truncated to the tiers k = N-ceil(p/2) .. N, normalized by
/// L_{N,ceil(p/2)}; p = 0 degenerates to the basis state |I,0>.
StateVector phi1_state_truncated(int n, int p);

/// Equal-amplitude superposition of all weight-w basis states of n spins.
StateVector dicke_state(int n, int w);

/// Number of diagonal entries that are exactly nonzero as stored.
int count_nonzero_diagonal(const Eigen::Ref<const Eigen::MatrixXd>& a);

}  // namespace spinhaf
