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
#include <numeric>
#include <random>

#include "spinhaf/matfun.hpp"
#include "test_helpers.hpp"

using namespace spinhaf;
using test::random_matrix;
using test::random_symmetric;
using test::rel_diff;

TEST_CASE("permanent of small fixed matrices") {
  CHECK(permanent(Eigen::MatrixXd::Identity(2, 2)) == doctest::Approx(1.0));
  CHECK(permanent(Eigen::MatrixXd::Ones(2, 2)) == doctest::Approx(2.0));
  CHECK(permanent(Eigen::MatrixXd::Ones(4, 4)) == doctest::Approx(24.0));

  Eigen::MatrixXd m(3, 3);
  m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  // sum over all 6 permutations: 45+48+72+84+96+105
  CHECK(permanent(m) == doctest::Approx(450.0));
  CHECK(permanent_enum(m) == doctest::Approx(450.0));

  Eigen::MatrixXd c(1, 1);
  c << -2.5;
  CHECK(permanent_enum(c) == doctest::Approx(-2.5));
  CHECK(permanent(Eigen::MatrixXd(0, 0)) == doctest::Approx(1.0));
  CHECK(permanent_enum(Eigen::MatrixXd(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("permanent matches the permutation-sum oracle on random input") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Eigen::MatrixXd b = random_matrix(5, seed);
    CHECK(rel_diff(permanent(b), permanent_enum(b)) < 1e-12);
  }
}

TEST_CASE("permanent rejects bad input") {
  CHECK_THROWS_AS(permanent(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(permanent_enum(Eigen::MatrixXd::Zero(11, 11)),
                  std::invalid_argument);
  CHECK_THROWS_AS(permanent(Eigen::MatrixXd::Zero(64, 64)),
                  std::invalid_argument);
}

TEST_CASE("memoized subset table refuses oversized index sets") {
  CHECK_THROWS_AS(hafnian(Eigen::MatrixXd::Zero(28, 28)),
                  std::invalid_argument);
  CHECK_THROWS_AS(loop_hafnian(Eigen::MatrixXd::Zero(27, 27)),
                  std::invalid_argument);
}

TEST_CASE("hafnian of small fixed matrices") {
  Eigen::MatrixXd pair(2, 2);
  pair << 0, 5, 5, 0;
  CHECK(hafnian(pair) == doctest::Approx(5.0));
  pair(0, 1) = pair(1, 0) = 3;
  CHECK(hafnian_enum(pair) == doctest::Approx(3.0));

  // (4-1)!! = 3 pairings, each with unit product
  CHECK(hafnian_enum(Eigen::MatrixXd::Ones(4, 4)) == doctest::Approx(3.0));
  CHECK(hafnian(Eigen::MatrixXd::Ones(4, 4)) == doctest::Approx(3.0));

  CHECK(hafnian(Eigen::MatrixXd(0, 0)) == doctest::Approx(1.0));
  CHECK(hafnian_enum(Eigen::MatrixXd(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("hafnian rejects odd or oversized input") {
  CHECK_THROWS_AS(hafnian(Eigen::MatrixXd::Zero(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(hafnian_enum(Eigen::MatrixXd::Zero(5, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(hafnian_enum(Eigen::MatrixXd::Zero(14, 14)),
                  std::invalid_argument);
}

TEST_CASE("hafnian agrees with the pair-partition oracle") {
  for (int dim = 2; dim <= 10; dim += 2) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Eigen::MatrixXd m = random_symmetric(dim, 100 * dim + seed, true);
      CHECK(rel_diff(hafnian(m), hafnian_enum(m)) < 1e-10);
    }
  }
  const Eigen::MatrixXd m8 = random_symmetric(8, 7, true);
  CHECK(rel_diff(hafnian(m8), hafnian_enum(m8)) < 1e-12);
}

TEST_CASE("hafnian ignores the diagonal") {
  Eigen::MatrixXd m = random_symmetric(6, 11, false);
  Eigen::MatrixXd bare = m;
  bare.diagonal().setZero();
  CHECK(hafnian(m) == hafnian(bare));
}

TEST_CASE("loop-hafnian of small fixed matrices") {
  Eigen::MatrixXd d(1, 1);
  d << 7;
  CHECK(loop_hafnian(d) == doctest::Approx(7.0));

  Eigen::MatrixXd m(2, 2);
  m << 2, 3, 3, 5;
  CHECK(loop_hafnian(m) == doctest::Approx(13.0));  // b + a*c

  m << 1, 0, 0, 1;
  CHECK(loop_hafnian_enum(m) == doctest::Approx(1.0));
  CHECK(loop_hafnian_enum(Eigen::MatrixXd(0, 0)) == doctest::Approx(1.0));
  CHECK(loop_hafnian(Eigen::MatrixXd(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("loop-hafnian agrees with the literal subset-sum oracle") {
  for (int dim = 1; dim <= 10; ++dim) {
    const Eigen::MatrixXd m = random_symmetric(dim, 40 + dim);
    CHECK(rel_diff(loop_hafnian(m), loop_hafnian_enum(m)) < 1e-10);
  }
  const Eigen::MatrixXd m6 = random_symmetric(6, 99);
  CHECK(rel_diff(loop_hafnian(m6), loop_hafnian_enum(m6)) < 1e-12);
}

TEST_CASE("loop-hafnian equals hafnian on a zero diagonal") {
  for (int dim = 2; dim <= 8; dim += 2) {
    const Eigen::MatrixXd m = random_symmetric(dim, 3 * dim, true);
    CHECK(loop_hafnian(m) == hafnian(m));
  }
}

TEST_CASE("embed_bipartite block layout") {
  Eigen::MatrixXd one(1, 1);
  one << 1;
  Eigen::MatrixXd e = embed_bipartite(one);
  Eigen::MatrixXd want(2, 2);
  want << 0, 1, 1, 0;
  CHECK(e == want);

  e = embed_bipartite(Eigen::MatrixXd::Identity(2, 2));
  CHECK(e.rows() == 4);
  CHECK(e(0, 2) == 1.0);
  CHECK(e(1, 3) == 1.0);
  CHECK(e.sum() == 4.0);  // the two entries and their transposes
}

TEST_CASE("hafnian of the bipartite embedding is the permanent") {
  Eigen::MatrixXd b(2, 2);
  b << 1, 2, 3, 4;
  CHECK(hafnian(embed_bipartite(b)) == doctest::Approx(10.0));
  CHECK(permanent_enum(b) == doctest::Approx(10.0));

  for (int n = 2; n <= 8; ++n) {
    const Eigen::MatrixXd r = random_matrix(n, 500 + n);
    const double perm_fast = permanent(r);
    CHECK(rel_diff(hafnian(embed_bipartite(r)), perm_fast) < 1e-12);
    CHECK(rel_diff(perm_fast, permanent_enum(r)) < 1e-12);
  }
}

TEST_CASE("matchings are invariant under simultaneous row/column permutation") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const int dim = 6;
    const Eigen::MatrixXd m = random_symmetric(dim, 777 + trial);
    std::vector<int> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Eigen::MatrixXd shuffled(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) shuffled(i, j) = m(perm[i], perm[j]);
    }
    CHECK(rel_diff(hafnian(shuffled), hafnian(m)) < 1e-12);
    CHECK(rel_diff(loop_hafnian(shuffled), loop_hafnian(m)) < 1e-12);
  }
}

TEST_CASE("an isolated index kills every perfect matching") {
  Eigen::MatrixXd m = random_symmetric(6, 31, true);
  m.row(2).setZero();
  m.col(2).setZero();
  CHECK(hafnian(m) == doctest::Approx(0.0));
  CHECK(hafnian_enum(m) == doctest::Approx(0.0));
}

TEST_CASE("principal submatrix extraction follows the mask") {
  const Eigen::MatrixXd m = random_symmetric(4, 8);
  const Eigen::MatrixXd sub = principal_submatrix(m, 0b0101);  // indices 1, 3
  CHECK(sub.rows() == 2);
  CHECK(sub(0, 0) == m(0, 0));
  CHECK(sub(0, 1) == m(0, 2));
  CHECK(sub(1, 1) == m(2, 2));
}

TEST_CASE("hafnian table exposes every even-subset hafnian") {
  const Eigen::MatrixXd m = random_symmetric(6, 12, true);
  const HafnianTable table(m);
  for (Mask mask = 0; mask < (Mask{1} << 6); ++mask) {
    if (popcount(mask) % 2 != 0) continue;
    CHECK(rel_diff(table.value(mask),
                   hafnian_enum(principal_submatrix(m, mask))) < 1e-10);
  }
}
