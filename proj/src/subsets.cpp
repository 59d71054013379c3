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

#include "spinhaf/subsets.hpp"

#include <stdexcept>
#include <string>

namespace spinhaf {

Mask mask_from_indices(const std::vector<int>& indices, int n) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("index " + std::to_string(i) +
                                  " out of range 1.." + std::to_string(n));
    }
    m |= bit_of(i);
  }
  return m;
}

std::vector<int> indices_from_mask(Mask mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i + 1);
  }
  return out;
}

}  // namespace spinhaf
