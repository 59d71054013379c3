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

#include "spinhaf/targetstates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinhaf {

std::int64_t double_factorial(int m) {
  if (m < -1) {
    throw std::invalid_argument("double_factorial: argument below -1");
  }
  if (m > 33) {
    throw std::invalid_argument("double_factorial: result overflows 64 bits");
  }
  std::int64_t prod = 1;
  for (int v = m; v > 1; v -= 2) prod *= v;
  return prod;
}

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > 62) throw std::invalid_argument("binomial: n too large for 64 bits");
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;  // stays integral term by term
  }
  return c;
}

namespace {

double norm_L_squared(int n, int l) {
  double sum = 0.0;
  for (int k = 0; k <= l; ++k) {
    const double dfact = static_cast<double>(double_factorial(2 * k - 1));
    sum += static_cast<double>(binomial(2 * n, 2 * k)) / (dfact * dfact);
  }
  return sum;
}

}  // namespace

NormalizationFactor norm_L(int n) {
  if (n < 0) throw std::invalid_argument("norm_L: N must be nonnegative");
  return {std::sqrt(norm_L_squared(n, n)), n, n};
}

NormalizationFactor norm_L_truncated(int n, int l) {
  if (n < 0) throw std::invalid_argument("norm_L_truncated: N must be nonnegative");
  if (l < 0 || l > n) {
    throw std::invalid_argument("norm_L_truncated: l out of range 0..N");
  }
  return {std::sqrt(norm_L_squared(n, l)), n, l};
}

namespace {

// Shared builder: tiers k = k_min..N with normalization L_{N,l}.
StateVector phi1_tiers(int n, int k_min, double norm) {
  const int width = 4 * n;
  if (width > kMaxSpins) {
    throw std::invalid_argument("phi1 state needs " + std::to_string(width) +
                                " spins, above the cap of " +
                                std::to_string(kMaxSpins));
  }
  StateVector psi = StateVector::Zero(Eigen::Index{1} << width);
  const Mask ones = full_mask(2 * n);
  for (int k = k_min; k <= n; ++k) {
    const double amp =
        1.0 / (norm * static_cast<double>(double_factorial(2 * (n - k) - 1)));
    for_each_subset_of_size(2 * n, 2 * k, [&](Mask s) {
      const Mask index = s | ((ones & ~s) << (2 * n));
      psi[static_cast<Eigen::Index>(index)] = amp;
    });
  }
  return psi;
}

}  // namespace

StateVector phi1_state(int n) {
  if (n < 1) throw std::invalid_argument("phi1_state: N must be positive");
  return phi1_tiers(n, 0, norm_L(n).value);
}

StateVector phi1_state_truncated(int n, int p) {
  if (n < 1) throw std::invalid_argument("phi1_state_truncated: N must be positive");
  if (p < 0 || p > 2 * n) {
    throw std::invalid_argument("phi1_state_truncated: p out of range 0..2N");
  }
  const int l = (p + 1) / 2;  // ceil(p/2)
  return phi1_tiers(n, n - l, norm_L_truncated(n, l).value);
}

StateVector dicke_state(int n, int w) {
  if (n < 0 || n > kMaxSpins) {
    throw std::invalid_argument("dicke_state: register width out of range");
  }
  if (w < 0 || w > n) {
    throw std::invalid_argument("dicke_state: weight out of range 0..n");
  }
  StateVector psi = StateVector::Zero(Eigen::Index{1} << n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n, w)));
  for_each_subset_of_size(n, w, [&](Mask s) {
    psi[static_cast<Eigen::Index>(s)] = amp;
  });
  return psi;
}

int count_nonzero_diagonal(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("count_nonzero_diagonal: matrix must be square");
  }
  int count = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0.0) ++count;
  }
  return count;
}

}  // namespace spinhaf
