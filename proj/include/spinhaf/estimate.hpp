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

#include <cstdint>
#include <map>

#include "spinhaf/statesim.hpp"

namespace spinhaf {

/// Loop-hafnian estimate recovered from one short-time overlap, with the
/// exact value alongside for reference.
struct EstimateReport {
  double t = 0.0;
  Complex raw_overlap{0.0, 0.0};
  double estimate = 0.0;      // real part of L_N * overlap / (-it)^N
  double imag_residue = 0.0;  // imaginary part of the same quantity
  double oracle = 0.0;
  double rel_error = 0.0;     // |estimate - oracle| / max(|oracle|, 1e-300)
};

/// Overlap <phi1| exp(-iHt) |0...0> on the 4N-spin register, rescaled by
/// L_N / (-it)^N. The relative error of the real part is O(t^2).
EstimateReport lhaf_from_overlap(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                 double t);

/// t = 0.1 / max(sum |coeff|, 1): keeps the leading series term dominant
/// without underflowing the (-it)^N divisor.
double default_evolution_time(const XXHamiltonian& h);

/// Shot-noise simulation of the overlap via Bernoulli outcomes with success
/// probabilities (1 + Re)/2 and (1 + Im)/2.
struct HadamardTestResult {
  double re_estimate = 0.0;
  double im_estimate = 0.0;
  double std_error = 0.0;  // larger of the two binomial standard errors
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
};

HadamardTestResult hadamard_test_sample(
    const Eigen::Ref<const Eigen::MatrixXd>& a, double t, std::int64_t shots,
    std::uint64_t seed);

/// Probabilities over the Hamming-weight-2k sector of exp(-iH1 t)|0...0>,
/// renormalized within the sector. As t -> 0 the ratios approach
/// |haf(A_S)|^2 / |haf(A_T)|^2.
struct SubmatrixDistribution {
  double t = 0.0;
  int k = 0;
  double sector_mass = 0.0;
  bool degenerate = false;  // no usable probability mass in the sector
  std::map<Mask, double> probs;
};

SubmatrixDistribution submatrix_distribution(
    const Eigen::Ref<const Eigen::MatrixXd>& a, double t, int k);

}  // namespace spinhaf
