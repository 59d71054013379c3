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

#include "spinhaf/matfun.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spinhaf {

namespace {

void require_square(const Eigen::Ref<const Eigen::MatrixXd>& m,
                    const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square, got " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
}

void require_even(Eigen::Index n, const char* what) {
  if (n % 2 != 0) {
    throw std::invalid_argument(std::string(what) +
                                ": dimension must be even, got " +
                                std::to_string(n));
  }
}

void require_at_most(Eigen::Index n, Eigen::Index limit, const char* what) {
  if (n > limit) {
    throw std::invalid_argument(std::string(what) + ": dimension " +
                                std::to_string(n) + " exceeds limit " +
                                std::to_string(limit));
  }
}

// Sum over all ways to pair up the listed indices of the product of pair
// weights. Empty list -> 1, odd list -> 0 (no perfect pairing exists).
double pairing_sum(const Eigen::Ref<const Eigen::MatrixXd>& m,
                   std::vector<int>& idx) {
  if (idx.empty()) return 1.0;
  if (idx.size() % 2 != 0) return 0.0;
  const int first = idx.front();
  double acc = 0.0;
  std::vector<int> rest(idx.size() - 2);
  for (std::size_t p = 1; p < idx.size(); ++p) {
    std::size_t out = 0;
    for (std::size_t q = 1; q < idx.size(); ++q) {
      if (q != p) rest[out++] = idx[q];
    }
    acc += m(first, idx[p]) * pairing_sum(m, rest);
  }
  return acc;
}

double diagonal_product_over_complement(
    const Eigen::Ref<const Eigen::MatrixXd>& m, Mask subset) {
  double prod = 1.0;
  for (int i = 0; i < m.rows(); ++i) {
    if (!(subset & (Mask{1} << i))) prod *= m(i, i);
  }
  return prod;
}

}  // namespace

double permanent(const Eigen::Ref<const Eigen::MatrixXd>& b) {
  require_square(b, "permanent");
  const int n = static_cast<int>(b.rows());
  if (n == 0) return 1.0;
  if (n >= 63) {
    throw std::invalid_argument("permanent: dimension too large for the 2^n sweep");
  }

  // Ryser: perm(B) = (-1)^n sum_{S != 0} (-1)^|S| prod_i sum_{j in S} B_ij,
  // walking subsets in Gray-code order so each step updates one column.
  Eigen::VectorXd rowsums = Eigen::VectorXd::Zero(n);
  double total = 0.0;
  Mask gray = 0;
  const Mask count = Mask{1} << n;
  for (Mask k = 1; k < count; ++k) {
    const int j = std::countr_zero(k);
    const Mask next_gray = gray ^ (Mask{1} << j);
    if (next_gray & (Mask{1} << j)) {
      rowsums += b.col(j);
    } else {
      rowsums -= b.col(j);
    }
    gray = next_gray;
    const double prod = rowsums.prod();
    total += (popcount(gray) % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

double permanent_enum(const Eigen::Ref<const Eigen::MatrixXd>& b) {
  require_square(b, "permanent_enum");
  const int n = static_cast<int>(b.rows());
  require_at_most(n, 10, "permanent_enum");
  if (n == 0) return 1.0;

  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  double total = 0.0;
  do {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= b(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

HafnianTable::HafnianTable(const Eigen::Ref<const Eigen::MatrixXd>& m)
    : n_(static_cast<int>(m.rows())) {
  require_square(m, "HafnianTable");
  require_at_most(n_, kMaxIndices, "HafnianTable");
  table_.assign(std::size_t{1} << n_, 0.0);
  table_[0] = 1.0;

  // haf(A_V) = 1/(|V|/2) * sum_{i<j in V} A_ij haf(A_{V \ {i,j}}); the
  // divisor removes the multiplicity of choosing which pair is peeled first.
  std::vector<int> idx;
  for (int size = 2; size <= n_; size += 2) {
    const double denom = size / 2;
    for_each_subset_of_size(n_, size, [&](Mask mask) {
      idx = indices_from_mask(mask);
      double acc = 0.0;
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          const Mask rest = mask ^ bit_of(idx[a]) ^ bit_of(idx[b]);
          acc += m(idx[a] - 1, idx[b] - 1) * table_[rest];
        }
      }
      table_[mask] = acc / denom;
    });
  }
}

double hafnian(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  require_square(m, "hafnian");
  require_even(m.rows(), "hafnian");
  if (m.rows() == 0) return 1.0;
  HafnianTable table(m);
  return table.value(full_mask(static_cast<int>(m.rows())));
}

double hafnian_enum(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  require_square(m, "hafnian_enum");
  require_even(m.rows(), "hafnian_enum");
  require_at_most(m.rows(), 12, "hafnian_enum");
  std::vector<int> idx(m.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return pairing_sum(m, idx);
}

double loop_hafnian(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  require_square(m, "loop_hafnian");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1.0;
  HafnianTable table(m);

  // Only even-size subsets carry a nonzero hafnian, so the subset sum is
  // restricted to them; everything reuses the one memo table.
  double total = 0.0;
  for (int size = 0; size <= n; size += 2) {
    for_each_subset_of_size(n, size, [&](Mask mask) {
      total += diagonal_product_over_complement(m, mask) * table.value(mask);
    });
  }
  return total;
}

double loop_hafnian_enum(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  require_square(m, "loop_hafnian_enum");
  const int n = static_cast<int>(m.rows());
  require_at_most(n, 12, "loop_hafnian_enum");
  if (n == 0) return 1.0;

  double total = 0.0;
  const Mask limit = Mask{1} << n;
  for (Mask subset = 0; subset < limit; ++subset) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (subset & (Mask{1} << i)) idx.push_back(i);
    }
    total += diagonal_product_over_complement(m, subset) * pairing_sum(m, idx);
  }
  return total;
}

Eigen::MatrixXd embed_bipartite(const Eigen::Ref<const Eigen::MatrixXd>& b) {
  require_square(b, "embed_bipartite");
  const Eigen::Index n = b.rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  out.topRightCorner(n, n) = b;
  out.bottomLeftCorner(n, n) = b.transpose();
  return out;
}

Eigen::MatrixXd principal_submatrix(const Eigen::Ref<const Eigen::MatrixXd>& m,
                                    Mask mask) {
  const std::vector<int> idx = indices_from_mask(mask);
  Eigen::MatrixXd out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) {
      out(r, c) = m(idx[r] - 1, idx[c] - 1);
    }
  }
  return out;
}

}  // namespace spinhaf
