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

#ifndef GEODETIC_STRATEGIES_HPP
#define GEODETIC_STRATEGIES_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geodetic/region_tensor.hpp"
#include "geodetic/removal_game.hpp"

namespace geodetic {

// A move in a tensor game, possibly summed with a nim heap: either decrement
// one entry or take from the heap.
struct MoveResponse {
  enum class Kind : std::uint8_t { Entry, Heap };
  Kind kind = Kind::Entry;
  int entry = 0;

  static MoveResponse at(int flat) { return {Kind::Entry, flat}; }
  static MoveResponse heap() { return {Kind::Heap, -1}; }
  bool is_heap() const { return kind == Kind::Heap; }
  auto operator<=>(const MoveResponse&) const = default;
};

// Matrix entries use compass names (NW, N, ..., C, ..., SE); higher ranks
// print region tuples; the heap move prints as "*1".
std::string describe_move(const MoveResponse& m, int rank);

// Compass indices of a 3x3 matrix, row-major.
namespace compass {
inline constexpr int NW = 0, N = 1, NE = 2, W = 3, C = 4, E = 5, SW = 6, S = 7, SE = 8;
}

// A tensor position plus a heap of the given size; heap 1 is the sum with *1.
struct CompositeState {
  RegionTensor board;
  int heap = 0;
  auto operator<=>(const CompositeState&) const = default;
};

// TER(M) + *heap or DNT(M) + *heap under normal play.
class CompositeGame {
 public:
  explicit CompositeGame(GameKind kind) : kind_(kind) {}
  GameKind kind() const { return kind_; }

  // No entry decrements remain (a face sum is zero, or DNT is blocked).
  bool board_finished(const RegionTensor& board) const;
  // Entry moves in ascending index order, then the heap move.
  std::vector<MoveResponse> moves(const CompositeState& s) const;
  bool is_legal(const CompositeState& s, const MoveResponse& m) const;
  bool is_over(const CompositeState& s) const { return moves(s).empty(); }
  CompositeState apply(const CompositeState& s, const MoveResponse& m) const;
  CompositeState undo(const CompositeState& s, const MoveResponse& m) const;

 private:
  GameKind kind_;
};

class StrategyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StrategyId : std::uint8_t {
  CentralReflection,
  HorizontalReflection,
  MiddleA,
  MiddleB,
  Opening,
};

const char* to_string(StrategyId id);

// The strategy in charge of the second player's next reply. Horizontal
// reflection remembers which of the eight matrix symmetries puts the board
// into its reference orientation.
struct ActiveStrategy {
  StrategyId id = StrategyId::CentralReflection;
  int orientation = 0;
  auto operator<=>(const ActiveStrategy&) const = default;
};

struct Reply {
  MoveResponse move;
  ActiveStrategy next;
};

// The first move (entries ascending, then the heap) after which the opponent
// has no move, if any.
std::optional<MoveResponse> winning_move(const CompositeGame& game, const CompositeState& after);

// Central reflection, any rank. DNT: answer at the reflected entry. TER: win
// if possible, otherwise reflect.
MoveResponse cr_strategy(const CompositeGame& game, const CompositeState& after,
                         const MoveResponse& adversary);

// Horizontal reflection for [[a,b,c],[e,o,t],[a,b,c]] with e even, o and t
// odd, t >= 3, after mapping the board by `orientation`:
//   1. a top or bottom row summing to 1 is emptied (winning);
//   2. if center and mid-right differ in parity, the odd one is decremented;
//   3. otherwise the adversary's move is mirrored top to bottom.
MoveResponse hr_strategy(const CompositeGame& game, const CompositeState& after,
                         const MoveResponse& adversary, int orientation);

// First matrix symmetry that puts `board` into the horizontal reflection
// start shape above.
std::optional<int> hr_orientation(const RegionTensor& board);

// Middle games for TER(M) + *1 from [[1,x,1],[0,1,0],[1,x,1]] (A) and
// [[0,x,1],[1,1,1],[1,x,0]] (B), and the opening from
// [[1,x,1],[y,1,y],[1,x,1]] with x, y odd. Each wins if it can, and
// otherwise follows its case analysis table up to the matrix symmetries,
// handing off to the other strategies where the table does.
Reply ma_strategy(const CompositeGame& game, const CompositeState& after,
                  const MoveResponse& adversary);
Reply mb_strategy(const CompositeGame& game, const CompositeState& after,
                  const MoveResponse& adversary);
Reply opening_strategy(const CompositeGame& game, const CompositeState& after,
                       const MoveResponse& adversary);

// Dispatches to the active strategy. Throws StrategyFailure when it has no
// answer.
Reply respond(const CompositeGame& game, const ActiveStrategy& active, const CompositeState& after,
              const MoveResponse& adversary);

// The eight symmetries of the 3x3 matrix as index permutations
// (image[perm[i]] = source[i]); index 0 is the identity.
const std::vector<std::vector<int>>& matrix_symmetries();
RegionTensor transform(const RegionTensor& t, const std::vector<int>& perm);

}  // namespace geodetic

#endif  // GEODETIC_STRATEGIES_HPP
