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

#include "spinhaf/spinham.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinhaf {

namespace {

int checked_even_dim(const Eigen::Ref<const Eigen::MatrixXd>& a,
                     const char* what) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
  if (a.rows() % 2 != 0) {
    throw std::invalid_argument(std::string(what) +
                                ": dimension must be even (2N), got " +
                                std::to_string(a.rows()));
  }
  return static_cast<int>(a.rows());
}

}  // namespace

XXHamiltonian build_h1(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  const int dim = checked_even_dim(a, "build_h1");
  XXHamiltonian h;
  h.num_spins = dim;
  for (int i = 1; i <= dim; ++i) {
    for (int j = i + 1; j <= dim; ++j) {
      const double c = a(i - 1, j - 1);
      if (c != 0.0) h.terms.push_back({i, j, c});
    }
  }
  return h;
}

XXHamiltonian build_h2(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  const int dim = checked_even_dim(a, "build_h2");
  XXHamiltonian h;
  h.num_spins = 2 * dim;
  for (int i = 1; i <= dim; ++i) {
    for (int j = i + 1; j <= dim; ++j) {
      const double c = a(i - 1, i - 1) * a(j - 1, j - 1);
      if (c != 0.0) h.terms.push_back({dim + i, dim + j, c});
    }
  }
  return h;
}

XXHamiltonian build_full(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  const int dim = checked_even_dim(a, "build_full");
  XXHamiltonian h = widen(build_h1(a), 2 * dim);
  XXHamiltonian h2 = build_h2(a);
  h.terms.insert(h.terms.end(), h2.terms.begin(), h2.terms.end());
  return h;
}

double one_norm(const XXHamiltonian& h) {
  double s = 0.0;
  for (const XXTerm& t : h.terms) s += std::abs(t.coeff);
  return s;
}

XXHamiltonian widen(const XXHamiltonian& h, int num_spins) {
  if (num_spins < h.num_spins) {
    throw std::invalid_argument("widen: target register is narrower");
  }
  XXHamiltonian out = h;
  out.num_spins = num_spins;
  return out;
}

}  // namespace spinhaf
