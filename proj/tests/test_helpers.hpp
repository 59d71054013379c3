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
#include <random>

namespace spinhaf::test {

inline double rel_diff(double actual, double expected) {
  return std::abs(actual - expected) / std::max(std::abs(expected), 1e-300);
}

/// Uniform draw in [-1, 1) derived from raw engine bits, so fixed seeds give
/// the same matrices on every standard library.
inline double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

/// Symmetric matrix with entries uniform in [-1, 1], mirrored exactly.
inline Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed,
                                        bool zero_diagonal = false) {
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = uniform_pm1(rng);
      a(i, j) = v;
      a(j, i) = v;
    }
    if (zero_diagonal) a(i, i) = 0.0;
  }
  return a;
}

inline Eigen::MatrixXd random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = uniform_pm1(rng);
  }
  return b;
}

/// Normalized random complex state on num_spins spins.
inline Eigen::VectorXcd random_state(int num_spins, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::VectorXcd psi(Eigen::Index{1} << num_spins);
  for (Eigen::Index m = 0; m < psi.size(); ++m) {
    psi[m] = std::complex<double>(uniform_pm1(rng), uniform_pm1(rng));
  }
  psi.normalize();
  return psi;
}

}  // namespace spinhaf::test
