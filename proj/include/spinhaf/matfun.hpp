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

#include "spinhaf/subsets.hpp"

namespace spinhaf {

/// Matrix permanent by Gray-code inclusion-exclusion, O(2^n * n) arithmetic.
double permanent(const Eigen::Ref<const Eigen::MatrixXd>& b);

/// Matrix permanent as the literal sum over all n! permutations (oracle,
/// n <= 10).
double permanent_enum(const Eigen::Ref<const Eigen::MatrixXd>& b);

/// Hafnian of an even-dimensional symmetric matrix via the pair-removal
/// recursion memoized over even-popcount index subsets. Diagonal entries
/// are ignored; the 0x0 hafnian is 1.
double hafnian(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Hafnian as the literal sum over all (2n-1)!! pair partitions (oracle,
/// dimension <= 12).
double hafnian_enum(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Loop-hafnian: sum over matchings mixing pair edges and self-loops,
/// with diagonal entries as loop weights. Defined for any dimension.
double loop_hafnian(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Loop-hafnian as the literal double sum over subsets and pair partitions
/// (oracle, dimension <= 12).
double loop_hafnian_enum(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// 2N x 2N block matrix [[O, B], [B^T, O]] whose hafnian equals perm(B).
Eigen::MatrixXd embed_bipartite(const Eigen::Ref<const Eigen::MatrixXd>& b);

/// Rows and columns of m restricted to the index subset encoded by mask.
Eigen::MatrixXd principal_submatrix(const Eigen::Ref<const Eigen::MatrixXd>& m,
                                    Mask mask);

/// Hafnians of every even-size principal submatrix of one matrix, computed
/// bottom-up over index subsets. Immutable after construction, so shared
/// concurrent reads are safe.
class HafnianTable {
 public:
  /// Largest supported index count; the table holds 2^n doubles.
  static constexpr int kMaxIndices = 26;

  explicit HafnianTable(const Eigen::Ref<const Eigen::MatrixXd>& m);

  /// haf of the principal submatrix named by an even-popcount mask.
  double value(Mask mask) const { return table_[mask]; }

  int num_indices() const { return n_; }

 private:
  int n_;
  std::vector<double> table_;
};

}  // namespace spinhaf
