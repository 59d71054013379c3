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

#include "spinhaf/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "spinhaf/matfun.hpp"
#include "spinhaf/targetstates.hpp"

namespace spinhaf {

namespace {

Complex phi1_time_overlap(const Eigen::Ref<const Eigen::MatrixXd>& a,
                          double t) {
  const int dim = static_cast<int>(a.rows());  // 2N
  if (dim == 0 || dim % 2 != 0 || a.rows() != a.cols()) {
    throw std::invalid_argument("overlap estimator needs a 2N x 2N matrix");
  }
  if (2 * dim > kMaxSpins) {
    throw std::invalid_argument("overlap estimator: 4N exceeds the spin cap");
  }
  const XXHamiltonian h = build_full(a);
  const StateVector evolved = evolve(h, t, basis_state(2 * dim, 0));
  return overlap(phi1_state(dim / 2), evolved);
}

}  // namespace

EstimateReport lhaf_from_overlap(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                 double t) {
  if (t == 0.0 || !std::isfinite(t)) {
    throw std::invalid_argument("lhaf_from_overlap: t must be finite and nonzero");
  }
  const int n = static_cast<int>(a.rows()) / 2;
  EstimateReport report;
  report.t = t;
  report.raw_overlap = phi1_time_overlap(a, t);
  const Complex scaled = norm_L(n).value * report.raw_overlap /
                         std::pow(Complex(0.0, -t), n);
  report.estimate = scaled.real();
  report.imag_residue = scaled.imag();
  report.oracle = loop_hafnian(a);
  report.rel_error = std::abs(report.estimate - report.oracle) /
                     std::max(std::abs(report.oracle), 1e-300);
  return report;
}

double default_evolution_time(const XXHamiltonian& h) {
  return 0.1 / std::max(one_norm(h), 1.0);
}

HadamardTestResult hadamard_test_sample(
    const Eigen::Ref<const Eigen::MatrixXd>& a, double t, std::int64_t shots,
    std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("hadamard_test_sample: shots must be >= 1");
  }
  const Complex ov = phi1_time_overlap(a, t);

  std::mt19937_64 rng(seed);
  const auto channel = [&](double component) {
    const double p = std::clamp((1.0 + component) / 2.0, 0.0, 1.0);
    std::binomial_distribution<std::int64_t> dist(shots, p);
    const double p_hat = static_cast<double>(dist(rng)) / shots;
    const double se = 2.0 * std::sqrt(p_hat * (1.0 - p_hat) / shots);
    return std::pair<double, double>(2.0 * p_hat - 1.0, se);
  };
  const auto [re_est, re_se] = channel(ov.real());
  const auto [im_est, im_se] = channel(ov.imag());

  HadamardTestResult result;
  result.re_estimate = re_est;
  result.im_estimate = im_est;
  result.std_error =
      std::max({re_se, im_se, 1.0 / static_cast<double>(shots)});
  result.shots = shots;
  result.seed = seed;
  return result;
}

SubmatrixDistribution submatrix_distribution(
    const Eigen::Ref<const Eigen::MatrixXd>& a, double t, int k) {
  const int dim = static_cast<int>(a.rows());  // 2N
  if (count_nonzero_diagonal(a) != 0) {
    throw std::invalid_argument(
        "submatrix_distribution: matrix must have a zero diagonal");
  }
  if (dim == 0 || dim % 2 != 0) {
    throw std::invalid_argument("submatrix_distribution: need a 2N x 2N matrix");
  }
  if (k < 1 || k > dim / 2) {
    throw std::invalid_argument("submatrix_distribution: k out of range 1..N");
  }
  if (dim > kMaxSpins) {
    throw std::invalid_argument("submatrix_distribution: 2N exceeds the spin cap");
  }

  const StateVector evolved = evolve(build_h1(a), t, basis_state(dim, 0));

  SubmatrixDistribution out;
  out.t = t;
  out.k = k;
  for_each_subset_of_size(dim, 2 * k, [&](Mask s) {
    out.sector_mass += std::norm(evolved[static_cast<Eigen::Index>(s)]);
  });
  if (out.sector_mass < 1e-280) {
    out.degenerate = true;
    return out;
  }
  for_each_subset_of_size(dim, 2 * k, [&](Mask s) {
    out.probs[s] =
        std::norm(evolved[static_cast<Eigen::Index>(s)]) / out.sector_mass;
  });
  return out;
}

}  // namespace spinhaf
