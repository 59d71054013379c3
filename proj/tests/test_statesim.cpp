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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "spinhaf/matfun.hpp"
#include "spinhaf/statesim.hpp"
#include "test_helpers.hpp"

using namespace spinhaf;
using test::random_state;
using test::random_symmetric;
using test::rel_diff;

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

XXHamiltonian single_term(double coeff) {
  XXHamiltonian h;
  h.num_spins = 2;
  h.terms.push_back({1, 2, coeff});
  return h;
}

StateVector nth_power_on_vacuum(const XXHamiltonian& h, int k) {
  StateVector psi = basis_state(h.num_spins, 0);
  for (int step = 0; step < k; ++step) psi = apply_h(h, psi);
  return psi;
}

}  // namespace

TEST_CASE("basis_state places the amplitude at the mask") {
  CHECK(basis_state(2, 0)[0] == Complex{1.0, 0.0});
  CHECK(basis_state(4, 0b101)[0b101] == Complex{1.0, 0.0});  // spins {1,3} up
  CHECK(basis_state(2, 0b11)[3] == Complex{1.0, 0.0});
  CHECK(basis_state(3, 0).sum() == Complex{1.0, 0.0});
  CHECK_THROWS_AS(basis_state(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(basis_state(40, 0), std::invalid_argument);
}

TEST_CASE("apply_h on a single coupling flips the pair") {
  const StateVector out = apply_h(single_term(2.5), basis_state(2, 0));
  CHECK(out[0b11] == Complex{2.5, 0.0});
  CHECK(out[0b00] == Complex{0.0, 0.0});

  const StateVector zeros = StateVector::Zero(4);
  CHECK(apply_h(single_term(1.0), zeros).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("apply_h rejects mismatched registers") {
  CHECK_THROWS_AS(apply_h(single_term(1.0), StateVector::Zero(8)),
                  std::invalid_argument);
}

TEST_CASE("triple application reaches the full mask with 3! haf(A)") {
  const Eigen::MatrixXd a = random_symmetric(6, 61, true);
  const StateVector vec = nth_power_on_vacuum(build_h1(a), 3);
  const double amp = vec[static_cast<Eigen::Index>(full_mask(6))].real();
  CHECK(rel_diff(amp, 6.0 * hafnian_enum(a)) < 1e-10);
}

TEST_CASE("one application recovers the coupling itself") {
  Eigen::MatrixXd a(2, 2);
  a << 0, 3, 3, 0;
  CHECK(transition_amplitude(build_h1(a), 1, 0b11, 0).real() ==
        doctest::Approx(3.0));
}

TEST_CASE("power amplitudes match submatrix hafnians on reachable sectors") {
  for (int dim : {4, 6, 8}) {
    const Eigen::MatrixXd a = random_symmetric(dim, 300 + dim, true);
    const HafnianTable table(a);
    const XXHamiltonian h1 = build_h1(a);
    StateVector vec = basis_state(dim, 0);
    for (int k = 0; k <= dim / 2; ++k) {
      if (k > 0) vec = apply_h(h1, vec);
      for (Eigen::Index m = 0; m < vec.size(); ++m) {
        const int weight = popcount(static_cast<Mask>(m));
        if (weight == 2 * k) {
          CHECK(rel_diff(vec[m].real(),
                         factorial(k) * table.value(static_cast<Mask>(m))) <
                1e-9);
        } else if (weight % 2 != 0 || weight > 2 * k) {
          CHECK(std::abs(vec[m]) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("below-order even sectors are populated, not zero") {
  // The weight-0 amplitude after two applications is the sum of squared
  // couplings: lower sectors of H^k are genuinely nonzero for k >= 2.
  const Eigen::MatrixXd a = random_symmetric(4, 71, true);
  double sum_sq = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) sum_sq += a(i, j) * a(i, j);
  }
  const double amp = transition_amplitude(build_h1(a), 2, 0, 0).real();
  CHECK(amp == doctest::Approx(sum_sq));
  CHECK(amp > 0.0);
}

TEST_CASE("six-spin full-set amplitude equals 3! times the hafnian") {
  const Eigen::MatrixXd a = random_symmetric(6, 83, true);
  const double amp =
      transition_amplitude(build_h1(a), 3, full_mask(6), 0).real();
  CHECK(rel_diff(amp, 6.0 * hafnian_enum(a)) < 1e-9);
}

TEST_CASE("4N amplitude vanishes when a complement diagonal is zero") {
  Eigen::MatrixXd a = random_symmetric(4, 97);
  a(2, 2) = 0.0;  // index 3 stays in S^c for S = {1,2}
  CHECK(transition_amplitude_4n(a, mask_from_indices({1, 2}, 4)) ==
        doctest::Approx(0.0));
}

TEST_CASE("4N amplitude on the full set recovers N! haf for a zero diagonal") {
  const Eigen::MatrixXd a = random_symmetric(4, 101, true);
  CHECK(rel_diff(transition_amplitude_4n(a, full_mask(4)),
                 2.0 * hafnian_enum(a)) < 1e-9);
}

TEST_CASE("4N amplitude factorizes into diagonal product and hafnian") {
  const Eigen::MatrixXd a = random_symmetric(4, 103);
  const double expected = 2.0 * 1.0 * a(2, 2) * a(3, 3) * a(0, 1);
  CHECK(rel_diff(transition_amplitude_4n(a, mask_from_indices({1, 2}, 4)),
                 expected) < 1e-9);
  CHECK_THROWS_AS(transition_amplitude_4n(a, mask_from_indices({1}, 4)),
                  std::invalid_argument);
}

TEST_CASE("binomial factorization across the two registers") {
  for (std::uint64_t seed = 5; seed <= 7; ++seed) {
    const Eigen::MatrixXd a = random_symmetric(4, seed);
    const int n = 2;
    const XXHamiltonian h1 = build_h1(a);
    const XXHamiltonian h2 = build_h2(a);
    for (int size = 0; size <= 4; size += 2) {
      const int k = size / 2;
      for_each_subset_of_size(4, size, [&](Mask s) {
        const Mask sc = full_mask(4) & ~s;
        const double lhs = transition_amplitude_4n(a, s);
        const double left = transition_amplitude(h1, k, s, 0).real();
        const double right =
            transition_amplitude(h2, n - k, sc << 4, 0).real();
        // C(N,k) * <S|H1^k|0> * <S^c|H2^{N-k}|0>
        const double expected =
            (factorial(n) / (factorial(k) * factorial(n - k))) * left * right;
        CHECK(std::abs(lhs - expected) <
              1e-9 * std::max(1.0, std::abs(expected)));
      });
    }
  }
}

TEST_CASE("evolve at t = 0 is the identity") {
  const Eigen::MatrixXd a = random_symmetric(6, 113, true);
  const StateVector psi = random_state(6, 3);
  const StateVector out = evolve(build_h1(a), 0.0, psi);
  CHECK((out - psi).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(evolve(build_h1(a), std::nan(""), psi),
                  std::invalid_argument);
  CHECK_THROWS_AS(evolve(build_h1(a), 0.1, StateVector::Zero(16)),
                  std::invalid_argument);
}

TEST_CASE("evolve on one coupling is a two-level rotation") {
  const double coeff = 0.7;
  const double t = 0.3;
  const StateVector out = evolve(single_term(coeff), t, basis_state(2, 0));
  CHECK(std::abs(out[0] - Complex{std::cos(coeff * t), 0.0}) < 1e-15);
  CHECK(std::abs(out[3] - Complex{0.0, -std::sin(coeff * t)}) < 1e-15);
  CHECK(std::abs(out[1]) == 0.0);

  // leading order of <11|exp(-iHt)|00> is (-it) * haf([[0,a],[a,0]])
  const double small = 1e-3;
  const StateVector tiny = evolve(single_term(coeff), small, basis_state(2, 0));
  CHECK(std::abs(tiny[3] - Complex{0.0, -small * coeff}) < 1e-8);
}

TEST_CASE("evolve preserves the norm and the parity sector") {
  const Eigen::MatrixXd a = random_symmetric(14, 127);
  const XXHamiltonian big = build_h1(a);  // 14 spins
  const StateVector psi = random_state(14, 9);
  const StateVector out = evolve(big, 0.37, psi);
  CHECK(std::abs(out.norm() - 1.0) < 1e-12);

  // parity sectors evolve independently
  const StateVector even = evolve(big, 0.37, basis_state(14, 0b11));
  for (Eigen::Index m = 0; m < even.size(); ++m) {
    if (std::abs(even[m]) > 0) CHECK(popcount(static_cast<Mask>(m)) % 2 == 0);
  }
}

TEST_CASE("term order does not change the evolution") {
  const Eigen::MatrixXd a = random_symmetric(8, 131, false);
  XXHamiltonian h = build_h1(a);
  const StateVector psi = random_state(8, 17);
  const StateVector ref = evolve(h, 0.83, psi);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(h.terms.begin(), h.terms.end(), rng);
    CHECK((evolve(h, 0.83, psi) - ref).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("evolve matches its power series, order by order") {
  const Eigen::MatrixXd a = random_symmetric(6, 137, true);
  const XXHamiltonian h = build_h1(a);
  const int truncation = 2;

  const auto residual = [&](double t) {
    Complex series{0.0, 0.0};
    StateVector power = basis_state(6, 0);
    double fact = 1.0;
    for (int n = 0; n <= truncation; ++n) {
      if (n > 0) {
        power = apply_h(h, power);
        fact *= n;
      }
      series += std::pow(Complex{0.0, -t}, n) / fact * power[0];
    }
    const StateVector evolved = evolve(h, t, basis_state(6, 0));
    return std::abs(evolved[0] - series);
  };

  const double t1 = 1e-2, t2 = 5e-3, t3 = 2.5e-3;
  const double slope12 = std::log(residual(t1) / residual(t2)) / std::log(t1 / t2);
  const double slope23 = std::log(residual(t2) / residual(t3)) / std::log(t2 / t3);
  CHECK(std::abs(slope12 - (truncation + 1)) < 0.2);
  CHECK(std::abs(slope23 - (truncation + 1)) < 0.2);
}

TEST_CASE("overlap is the conjugated inner product") {
  const StateVector psi = random_state(4, 21);
  CHECK(std::abs(overlap(psi, psi) - Complex{1.0, 0.0}) < 1e-14);
  CHECK(overlap(basis_state(2, 1), basis_state(2, 2)) == Complex{0.0, 0.0});
  CHECK_THROWS_AS(overlap(basis_state(2, 0), basis_state(3, 0)),
                  std::invalid_argument);

  // conjugation sits on the bra side
  StateVector bra = StateVector::Zero(2);
  bra[0] = Complex{0.0, 1.0};
  StateVector ket = StateVector::Zero(2);
  ket[0] = Complex{1.0, 0.0};
  CHECK(overlap(bra, ket) == Complex{0.0, -1.0});
}

TEST_CASE("num_spins_of recognizes power-of-two lengths") {
  CHECK(num_spins_of(StateVector::Zero(8)) == 3);
  CHECK(num_spins_of(StateVector::Zero(1)) == 0);
  CHECK_THROWS_AS(num_spins_of(StateVector::Zero(6)), std::invalid_argument);
}
