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

#include "geodetic/removal_game.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

#include "geodetic/errors.hpp"

namespace geodetic {

const char* to_string(GameKind kind) { return kind == GameKind::Ter ? "ter" : "dnt"; }

GameKind parse_game_kind(std::string_view text) {
  std::string lower(text);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "ter") return GameKind::Ter;
  if (lower == "dnt") return GameKind::Dnt;
  throw InvalidInput("unknown game '" + std::string(text) + "' (expected ter or dnt)");
}

RemovalGame::RemovalGame(LatticeGraph graph, GameKind kind)
    : graph_(std::move(graph)), kind_(kind) {
  const int n = graph_.vertex_count();
  if (n > 64) {
    throw CapacityExceeded("removal games support at most 64 vertices, " + graph_.to_string() +
                               " has " + std::to_string(n),
                           0);
  }
  all_ = n == 64 ? ~Selection{0} : (Selection{1} << n) - 1;
  for (const auto& facet : facets(graph_)) facet_masks_.push_back(facet.mask());
  for (const auto& perm : box_automorphisms(graph_.dims())) symmetries_.emplace_back(perm);
}

bool RemovalGame::canonical_dims() const {
  return std::any_of(graph_.dims().begin(), graph_.dims().end(), [](int n) { return n >= 3; });
}

bool RemovalGame::complement_hull_full(Selection selected) const {
  const Selection rest = all_ & ~selected;
  for (Selection facet : facet_masks_) {
    if (!(rest & facet)) return false;
  }
  return true;
}

bool RemovalGame::is_terminal(Selection selected) const {
  if (kind_ == GameKind::Ter) return !complement_hull_full(selected);
  if (!complement_hull_full(selected)) return true;
  return legal_moves(selected).empty();
}

std::vector<int> RemovalGame::legal_moves(Selection selected) const {
  if (!complement_hull_full(selected)) {
    throw ContractViolation(kind_ == GameKind::Ter
                                ? "legal moves requested for a terminal TER position"
                                : "DNT position whose unselected vertices lack a full hull");
  }
  std::vector<int> moves;
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    const Selection bit = Selection{1} << v;
    if (selected & bit) continue;
    if (kind_ == GameKind::Dnt && !complement_hull_full(selected | bit)) continue;
    moves.push_back(v);
  }
  return moves;
}

std::vector<Selection> RemovalGame::options(Selection selected) const {
  std::vector<Selection> out;
  if (!complement_hull_full(selected)) return out;
  for (int v : legal_moves(selected)) out.push_back(selected | (Selection{1} << v));
  return out;
}

Selection RemovalGame::canonical_form(Selection selected) const {
  Selection best = selected;
  for (const auto& sym : symmetries_) best = std::min(best, sym(selected));
  return best;
}

Gamegraph<Selection> RemovalGame::gamegraph() const {
  return {start(), [game = *this](const Selection& p) { return game.options(p); }};
}

Gamegraph<Selection> RemovalGame::quotient_gamegraph() const {
  return {canonical_form(start()), [game = *this](const Selection& p) {
            auto opts = game.options(p);
            for (auto& q : opts) q = game.canonical_form(q);
            return normalize_options(std::move(opts));
          }};
}

VertexSet RemovalGame::to_vertex_set(Selection selected) const {
  return VertexSet::from_mask(graph_.vertex_count(), selected);
}

Selection RemovalGame::to_selection(const VertexSet& selected) const {
  if (selected.universe() != graph_.vertex_count()) {
    throw InvalidInput("vertex set belongs to a different graph");
  }
  return selected.mask();
}

SolveResult solve(const LatticeGraph& g, GameKind kind, bool use_quotient,
                  std::size_t position_limit) {
  RemovalGame game(g, kind);
  NimSolver<Selection> solver(use_quotient ? game.quotient_gamegraph() : game.gamegraph(),
                              position_limit);
  SolveResult result;
  result.nim = solver.nim();
  result.positions_explored = solver.positions_explored();
  result.non_canonical_dims = !game.canonical_dims();
  return result;
}

SolveResult solve_naive(const LatticeGraph& g, GameKind kind, std::size_t visit_limit) {
  RemovalGame game(g, kind);
  SolveResult result;
  result.nim = naive_nim(game.gamegraph(), game.start(), visit_limit, &result.positions_explored);
  result.non_canonical_dims = !game.canonical_dims();
  return result;
}

}  // namespace geodetic
