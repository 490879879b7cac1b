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

#ifndef GEODETIC_REMOVAL_GAME_HPP
#define GEODETIC_REMOVAL_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "geodetic/bit_permutation.hpp"
#include "geodetic/gamegraph.hpp"
#include "geodetic/lattice.hpp"

namespace geodetic {

// TER ends (and is won) by the move after which the unselected vertices no
// longer have a full hull. DNT forbids such moves; it ends when none remain.
enum class GameKind { Ter, Dnt };

const char* to_string(GameKind kind);
GameKind parse_game_kind(std::string_view text);

// Bit v is set iff vertex v (row-major index) has been selected.
using Selection = std::uint64_t;

// Geodetic removing game on a lattice with at most 64 vertices.
class RemovalGame {
 public:
  RemovalGame(LatticeGraph graph, GameKind kind);

  const LatticeGraph& graph() const { return graph_; }
  GameKind kind() const { return kind_; }
  Selection start() const { return 0; }
  Selection all_vertices() const { return all_; }

  // Lattice graphs in the strict sense have some dimension >= 3. Boxes of
  // 2s (P2 x P2, the cube, ...) are accepted but flagged.
  bool canonical_dims() const;

  bool complement_hull_full(Selection selected) const;
  bool is_terminal(Selection selected) const;
  // DNT: unselected v keeping the hull of the rest full. TER: every
  // unselected vertex. Throws ContractViolation for a terminal TER position
  // or a DNT position whose unselected vertices already lost the full hull.
  std::vector<int> legal_moves(Selection selected) const;
  // Options of a position; empty for terminal positions.
  std::vector<Selection> options(Selection selected) const;

  // Least image (as an integer mask) of the selection under the lattice's
  // symmetry group.
  Selection canonical_form(Selection selected) const;
  std::size_t symmetry_order() const { return symmetries_.size(); }
  Selection apply_symmetry(std::size_t which, Selection selected) const {
    return symmetries_[which](selected);
  }

  Gamegraph<Selection> gamegraph() const;
  // Positions are canonical forms; the quotient map is canonical_form().
  Gamegraph<Selection> quotient_gamegraph() const;

  VertexSet to_vertex_set(Selection selected) const;
  Selection to_selection(const VertexSet& selected) const;

 private:
  LatticeGraph graph_;
  GameKind kind_;
  Selection all_ = 0;
  std::vector<Selection> facet_masks_;
  std::vector<MaskPermuter> symmetries_;
};

struct SolveResult {
  Nim nim = 0;
  std::size_t positions_explored = 0;
  bool non_canonical_dims = false;
};

// Nim of the starting position by memoized search on the raw gamegraph or
// on its symmetry quotient.
SolveResult solve(const LatticeGraph& g, GameKind kind, bool use_quotient,
                  std::size_t position_limit = kDefaultPositionLimit);

// Unmemoized recursion on the raw gamegraph.
SolveResult solve_naive(const LatticeGraph& g, GameKind kind,
                        std::size_t visit_limit = kDefaultPositionLimit);

}  // namespace geodetic

#endif  // GEODETIC_REMOVAL_GAME_HPP
