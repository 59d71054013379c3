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

#include <bit>
#include <cstdint>
#include <vector>

namespace spinhaf {

// Subsets of {1,...,n} are encoded as bitmasks: index i <-> bit i-1.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit_of(int index_1based) { return Mask{1} << (index_1based - 1); }

inline Mask full_mask(int n) { return (n == 0) ? Mask{0} : ((Mask{1} << n) - 1); }

/// Mask for a list of 1-based indices.
Mask mask_from_indices(const std::vector<int>& indices, int n);

/// 1-based indices of the set bits, ascending.
std::vector<int> indices_from_mask(Mask mask);

/// Next mask with the same popcount (Gosper's hack); call with mask != 0.
inline Mask next_same_popcount(Mask v) {
  Mask c = v & (~v + 1);
  Mask r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

/// Visits every popcount-w submask of {1,...,n} in increasing numeric order.
template <typename Fn>
void for_each_subset_of_size(int n, int w, Fn&& fn) {
  if (w < 0 || w > n) return;
  if (w == 0) {
    fn(Mask{0});
    return;
  }
  Mask m = full_mask(w);
  const Mask limit = Mask{1} << n;
  while (m < limit) {
    fn(m);
    if (m == (full_mask(w) << (n - w))) break;
    m = next_same_popcount(m);
  }
}

}  // namespace spinhaf
