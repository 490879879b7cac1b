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

#ifndef GEODETIC_TENSOR_GAME_HPP
#define GEODETIC_TENSOR_GAME_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "geodetic/bit_permutation.hpp"
#include "geodetic/gamegraph.hpp"
#include "geodetic/region_tensor.hpp"
#include "geodetic/removal_game.hpp"

namespace geodetic {

// Players decrement a positive entry by one. DNT: every face sum must stay
// positive. TER: the game ends once some face sum reaches zero.
//
// States are packed into 64 bits, one fixed-width field per entry; the width
// is fixed by the largest entry of the starting tensor since entries only
// decrease.
class TensorGame {
 public:
  using Code = std::uint64_t;

  TensorGame(const RegionTensor& start, GameKind kind);

  GameKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int field_width() const { return width_; }
  Code start() const { return start_; }

  Code encode(const RegionTensor& t) const;
  RegionTensor decode(Code code) const;
  int entry(Code code, int flat) const {
    return static_cast<int>((code >> (flat * width_)) & field_mask_);
  }

  // All face sums positive.
  bool is_live(Code code) const;
  std::vector<Code> options(Code code) const;
  bool is_terminal(Code code) const { return options(code).empty(); }

  // Least code over axis reversals and axis permutations.
  Code canonical_form(Code code) const;
  std::size_t symmetry_order() const { return symmetries_.size(); }

  Gamegraph<Code> gamegraph(bool use_symmetry) const;

 private:
  GameKind kind_;
  int rank_;
  int entries_;
  int width_;
  Code field_mask_;
  Code start_;
  std::vector<Code> face_masks_;
  std::vector<std::vector<int>> faces_of_entry_;
  std::vector<MaskPermuter> symmetries_;
};

// Options of a live tensor. Throws ContractViolation when some face sum is
// already zero.
std::vector<RegionTensor> tensor_options(const RegionTensor& t, GameKind kind);

struct TensorSolveResult {
  Nim nim = 0;
  std::size_t positions_explored = 0;
};

TensorSolveResult tensor_nim(const RegionTensor& t, GameKind kind, bool use_symmetry,
                             std::size_t position_limit = kDefaultPositionLimit);

// DNT(t) is DNT(t with center 0) + D_center, so its nim is the returned
// tensor's nim xor the returned parity.
std::pair<RegionTensor, Nim> reduce_center_dnt(const RegionTensor& t);

// Center decrements in TER are delay moves: TER(t) = TER(t with center 0)
// delayed by D_center, whose nim only depends on the center's parity.
RegionTensor reduce_center_ter(const RegionTensor& t);

// TER(t with center 0) delayed by D_center, built through the engine.
Gamegraph<std::pair<TensorGame::Code, int>> ter_center_delay_game(const RegionTensor& t);

struct CenterReductionReport {
  bool pass = true;
  std::size_t matrices_checked = 0;
  std::optional<RegionTensor> counterexample;
  Nim expected = 0;
  Nim actual = 0;
};

// Checks both center reductions by exhaustive search on every 3x3 matrix with
// off-center entries in 0..max_off_center and center in 0..max_center (DNT:
// live matrices only). TER is compared against the delayed game and against
// the matrix with the center replaced by its parity.
CenterReductionReport verify_center_reductions(GameKind kind, int max_off_center, int max_center);

}  // namespace geodetic

#endif  // GEODETIC_TENSOR_GAME_HPP
