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

#include "geodetic/bit_permutation.hpp"

#include "geodetic/errors.hpp"

namespace geodetic {

MaskPermuter::MaskPermuter(std::span<const int> perm, int width) {
  const std::size_t bits = perm.size() * static_cast<std::size_t>(width);
  if (width < 1 || bits > 64) throw InvalidInput("packed word exceeds 64 bits");
  std::vector<int> bit_image(bits);
  for (std::size_t field = 0; field < perm.size(); ++field) {
    for (int j = 0; j < width; ++j) bit_image[field * width + j] = perm[field] * width + j;
  }
  tables_.resize((bits + 7) / 8);
  for (std::size_t b = 0; b < tables_.size(); ++b) {
    for (unsigned value = 0; value < 256; ++value) {
      std::uint64_t out = 0;
      for (unsigned j = 0; j < 8; ++j) {
        std::size_t bit = 8 * b + j;
        if (bit < bits && (value >> j & 1u)) out |= std::uint64_t{1} << bit_image[bit];
      }
      tables_[b][value] = out;
    }
  }
}

}  // namespace geodetic
