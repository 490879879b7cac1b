// Copyright 2026 The Geodetic Games Authors.
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

#ifndef GEODETIC_BIT_PERMUTATION_HPP
#define GEODETIC_BIT_PERMUTATION_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace geodetic {

// Applies a fixed permutation of fixed-width fields packed into a 64-bit
// word: field i (bits [i*width, (i+1)*width)) moves to field perm[i].
// Uses one 256-entry table per input byte.
class MaskPermuter {
 public:
  MaskPermuter(std::span<const int> perm, int width = 1);

  std::uint64_t operator()(std::uint64_t word) const {
    std::uint64_t out = 0;
    for (std::size_t b = 0; b < tables_.size(); ++b) {
      out |= tables_[b][(word >> (8 * b)) & 0xff];
    }
    return out;
  }

 private:
  std::vector<std::array<std::uint64_t, 256>> tables_;
};

}  // namespace geodetic

#endif  // GEODETIC_BIT_PERMUTATION_HPP
