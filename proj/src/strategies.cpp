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

#include "geodetic/strategies.hpp"

#include <array>
#include <functional>
#include <sstream>

#include "geodetic/errors.hpp"

namespace geodetic {

namespace {

using namespace compass;
using Board = std::array<int, 9>;

bool decrement_keeps_faces(const RegionTensor& t, const FaceSums& sums, int flat) {
  for (int f : faces_of_entry(t, flat)) {
    if (sums.sums[f] <= 1) return false;
  }
  return true;
}

}  // namespace

std::string describe_move(const MoveResponse& m, int rank) {
  if (m.is_heap()) return "*1";
  if (rank == 2) {
    static const char* const kNames[9] = {"NW", "N", "NE", "W", "C", "E", "SW", "S", "SE"};
    return kNames[m.entry];
  }
  std::ostringstream out;
  RegionTensor shape(rank);
  auto regions = shape.regions_of(m.entry);
  out << '(';
  for (std::size_t i = 0; i < regions.size(); ++i) out << (i ? "," : "") << regions[i];
  out << ')';
  return out.str();
}

const char* to_string(StrategyId id) {
  switch (id) {
    case StrategyId::CentralReflection: return "CR";
    case StrategyId::HorizontalReflection: return "HR";
    case StrategyId::MiddleA: return "MA";
    case StrategyId::MiddleB: return "MB";
    case StrategyId::Opening: return "opening";
  }
  return "?";
}

bool CompositeGame::board_finished(const RegionTensor& board) const {
  FaceSums sums = face_sums(board);
  if (!sums.all_positive()) return true;
  for (int i = 0; i < board.size(); ++i) {
    if (board[i] == 0) continue;
    if (kind_ == GameKind::Ter || decrement_keeps_faces(board, sums, i)) return false;
  }
  return true;
}

std::vector<MoveResponse> CompositeGame::moves(const CompositeState& s) const {
  std::vector<MoveResponse> out;
  FaceSums sums = face_sums(s.board);
  if (sums.all_positive()) {
    for (int i = 0; i < s.board.size(); ++i) {
      if (s.board[i] == 0) continue;
      if (kind_ == GameKind::Ter || decrement_keeps_faces(s.board, sums, i)) {
        out.push_back(MoveResponse::at(i));
      }
    }
  }
  if (s.heap > 0) out.push_back(MoveResponse::heap());
  return out;
}

bool CompositeGame::is_legal(const CompositeState& s, const MoveResponse& m) const {
  if (m.is_heap()) return s.heap > 0;
  if (m.entry < 0 || m.entry >= s.board.size() || s.board[m.entry] == 0) return false;
  FaceSums sums = face_sums(s.board);
  if (!sums.all_positive()) return false;
  return kind_ == GameKind::Ter || decrement_keeps_faces(s.board, sums, m.entry);
}

CompositeState CompositeGame::apply(const CompositeState& s, const MoveResponse& m) const {
  if (!is_legal(s, m)) throw ContractViolation("illegal move " + describe_move(m, s.board.rank()));
  CompositeState next = s;
  if (m.is_heap()) {
    --next.heap;
  } else {
    --next.board[m.entry];
  }
  return next;
}

CompositeState CompositeGame::undo(const CompositeState& s, const MoveResponse& m) const {
  CompositeState prev = s;
  if (m.is_heap()) {
    ++prev.heap;
  } else {
    ++prev.board[m.entry];
  }
  return prev;
}

const std::vector<std::vector<int>>& matrix_symmetries() {
  static const std::vector<std::vector<int>> kSymmetries = box_automorphisms({3, 3});
  return kSymmetries;
}

RegionTensor transform(const RegionTensor& t, const std::vector<int>& perm) {
  RegionTensor out(t.rank());
  for (int i = 0; i < t.size(); ++i) out[perm[i]] = t[i];
  return out;
}

namespace {

std::vector<int> inverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

MoveResponse transform(const MoveResponse& m, const std::vector<int>& perm) {
  return m.is_heap() ? m : MoveResponse::at(perm[m.entry]);
}

Board board_of(const RegionTensor& t) {
  if (t.rank() != 2) throw InvalidInput("strategy needs a 3x3 matrix");
  Board b{};
  for (int i = 0; i < 9; ++i) b[i] = t[i];
  return b;
}

bool rows_match(const Board& b, std::initializer_list<int> expected) {
  int i = 0;
  for (int v : expected) {
    if (b[i++] != v) return false;
  }
  return true;
}

// A rule table entry: reply and the strategy that takes over afterwards.
struct Rule {
  MoveResponse move;
  StrategyId next;
};

using RuleTable = std::function<std::optional<Rule>(const Board& pre, int heap, const MoveResponse& a)>;

const MoveResponse kHeap = MoveResponse::heap();
MoveResponse at(int i) { return MoveResponse::at(i); }
bool is(const MoveResponse& a, int i) { return !a.is_heap() && a.entry == i; }

std::optional<Rule> ma_rules(const Board& p, int heap, const MoveResponse& a) {
  const StrategyId self = StrategyId::MiddleA;
  const int x = p[N];
  if (heap == 1 && x >= 1 && rows_match(p, {1, x, 1, 0, 1, 0, 1, x, 1})) {
    if (a.is_heap()) return Rule{at(C), StrategyId::CentralReflection};
    if (is(a, C)) return Rule{kHeap, StrategyId::CentralReflection};
    if (is(a, N)) return Rule{x >= 2 ? at(S) : kHeap, self};
    if (is(a, NW)) return Rule{at(NE), self};
    if (is(a, NE)) return Rule{at(NW), self};
  }
  if (heap == 1 && x >= 1 && rows_match(p, {0, x, 0, 0, 1, 0, 1, x, 1})) {
    if (is(a, N) && x >= 2) return Rule{at(S), self};
    if (is(a, S)) return Rule{x >= 2 ? at(N) : at(C), self};
    if (is(a, C)) return Rule{at(S), self};
  }
  if (heap == 1 && x >= 2 && rows_match(p, {0, x, 0, 0, 0, 0, 1, x - 1, 1})) {
    if (is(a, N)) return Rule{at(S), self};
    if (is(a, S)) return Rule{at(N), self};
  }
  if (heap == 0 && rows_match(p, {1, 0, 1, 0, 1, 0, 1, 1, 1})) {
    if (is(a, C)) return Rule{at(S), StrategyId::CentralReflection};
    if (is(a, S)) return Rule{at(C), StrategyId::CentralReflection};
  }
  return std::nullopt;
}

std::optional<Rule> mb_rules(const Board& p, int heap, const MoveResponse& a) {
  const StrategyId self = StrategyId::MiddleB;
  const int x = p[N];
  if (heap == 1 && x >= 1 && rows_match(p, {0, x, 1, 1, 1, 1, 1, x, 0})) {
    if (a.is_heap()) return Rule{at(C), StrategyId::CentralReflection};
    if (is(a, C)) return Rule{kHeap, StrategyId::CentralReflection};
    if (is(a, N) && x >= 2) return Rule{at(S), self};
    if (is(a, S) && x >= 2) return Rule{at(N), self};
    if (is(a, W)) return Rule{at(NE), self};
    if (is(a, NE)) return Rule{at(W), self};
  }
  if (heap == 1 && x >= 1 && rows_match(p, {0, x, 0, 0, 1, 1, 1, x, 0})) {
    if (is(a, N) && x >= 2) return Rule{at(S), self};
    if (is(a, S)) return Rule{x >= 2 ? at(N) : at(C), self};
    if (is(a, C)) return Rule{at(S), self};
  }
  if (heap == 1 && x >= 2 && rows_match(p, {0, x, 0, 0, 0, 1, 1, x - 1, 0})) {
    if (is(a, N)) return Rule{at(S), self};
    if (is(a, S)) return Rule{at(N), self};
  }
  return std::nullopt;
}

std::optional<Rule> opening_rules(const Board& p, int heap, const MoveResponse& a) {
  const int x = p[N], y = p[W];
  if (heap == 1 && x >= 1 && y >= 1 && rows_match(p, {1, x, 1, y, 1, y, 1, x, 1})) {
    if (a.is_heap()) return Rule{at(C), StrategyId::CentralReflection};
    if (is(a, C)) return Rule{kHeap, StrategyId::CentralReflection};
    if (is(a, W) && y >= 3) return Rule{kHeap, StrategyId::HorizontalReflection};
    if (is(a, W) && y == 1) return Rule{at(E), StrategyId::MiddleA};
    if (is(a, NW) && y == 1) return Rule{at(SE), StrategyId::MiddleB};
    if (is(a, NW) && x >= 3 && y >= 3) return Rule{kHeap, StrategyId::Opening};
  }
  if (heap == 0 && x >= 1 && y >= 1 && rows_match(p, {0, x, 1, y, 1, y, 1, x, 1})) {
    if (is(a, W)) return Rule{at(SW), StrategyId::HorizontalReflection};
    if (is(a, SW)) return Rule{at(W), StrategyId::HorizontalReflection};
    if (is(a, E)) return Rule{at(SW), StrategyId::HorizontalReflection};
    if (is(a, C)) return Rule{at(SE), StrategyId::CentralReflection};
    if (is(a, SE)) return Rule{at(C), StrategyId::CentralReflection};
  }
  return std::nullopt;
}

Reply table_reply(const CompositeGame& game, const CompositeState& after,
                  const MoveResponse& adversary, const RuleTable& rules, StrategyId self) {
  if (auto win = winning_move(game, after)) return {*win, {self, 0}};
  const CompositeState pre = game.undo(after, adversary);
  const auto& symmetries = matrix_symmetries();
  for (const auto& sigma : symmetries) {
    Board p = board_of(transform(pre.board, sigma));
    auto rule = rules(p, pre.heap, transform(adversary, sigma));
    if (!rule) continue;
    Reply reply{transform(rule->move, inverse(sigma)), {rule->next, 0}};
    if (rule->next == StrategyId::HorizontalReflection) {
      if (!game.is_legal(after, reply.move)) break;
      auto orientation = hr_orientation(game.apply(after, reply.move).board);
      if (!orientation) {
        throw StrategyFailure("horizontal reflection handoff from a board of the wrong shape");
      }
      reply.next.orientation = *orientation;
    }
    return reply;
  }
  throw StrategyFailure(std::string(to_string(self)) + " has no rule for " +
                        describe_move(adversary, 2) + " from " + format_tensor(pre.board) +
                        (pre.heap ? " + *" + std::to_string(pre.heap) : std::string()));
}

}  // namespace

std::optional<MoveResponse> winning_move(const CompositeGame& game, const CompositeState& after) {
  for (const auto& m : game.moves(after)) {
    if (game.is_over(game.apply(after, m))) return m;
  }
  return std::nullopt;
}

MoveResponse cr_strategy(const CompositeGame& game, const CompositeState& after,
                         const MoveResponse& adversary) {
  if (game.kind() == GameKind::Ter) {
    if (auto win = winning_move(game, after)) return *win;
  }
  if (adversary.is_heap()) throw StrategyFailure("central reflection cannot answer a heap move");
  return MoveResponse::at(after.board.reflect_index(adversary.entry));
}

std::optional<int> hr_orientation(const RegionTensor& board) {
  const auto& symmetries = matrix_symmetries();
  for (std::size_t k = 0; k < symmetries.size(); ++k) {
    Board p = board_of(transform(board, symmetries[k]));
    bool rows_equal = p[NW] == p[SW] && p[N] == p[S] && p[NE] == p[SE];
    if (rows_equal && p[W] % 2 == 0 && p[C] % 2 == 1 && p[E] % 2 == 1 && p[E] >= 3) {
      return static_cast<int>(k);
    }
  }
  return std::nullopt;
}

MoveResponse hr_strategy(const CompositeGame& game, const CompositeState& after,
                         const MoveResponse& adversary, int orientation) {
  (void)game;
  const auto& sigma = matrix_symmetries().at(orientation);
  const auto back = inverse(sigma);
  Board p = board_of(transform(after.board, sigma));
  for (int row : {0, 2}) {
    if (p[3 * row] + p[3 * row + 1] + p[3 * row + 2] != 1) continue;
    for (int c = 0; c < 3; ++c) {
      if (p[3 * row + c] > 0) return transform(MoveResponse::at(3 * row + c), back);
    }
  }
  if (p[C] % 2 != p[E] % 2) {
    return transform(MoveResponse::at(p[C] % 2 == 1 ? C : E), back);
  }
  MoveResponse a = transform(adversary, sigma);
  if (a.is_heap()) throw StrategyFailure("horizontal reflection cannot answer a heap move");
  int row = a.entry / 3, col = a.entry % 3;
  return transform(MoveResponse::at(3 * (2 - row) + col), back);
}

Reply ma_strategy(const CompositeGame& game, const CompositeState& after,
                  const MoveResponse& adversary) {
  return table_reply(game, after, adversary, ma_rules, StrategyId::MiddleA);
}

Reply mb_strategy(const CompositeGame& game, const CompositeState& after,
                  const MoveResponse& adversary) {
  return table_reply(game, after, adversary, mb_rules, StrategyId::MiddleB);
}

Reply opening_strategy(const CompositeGame& game, const CompositeState& after,
                       const MoveResponse& adversary) {
  return table_reply(game, after, adversary, opening_rules, StrategyId::Opening);
}

Reply respond(const CompositeGame& game, const ActiveStrategy& active, const CompositeState& after,
              const MoveResponse& adversary) {
  switch (active.id) {
    case StrategyId::CentralReflection:
      return {cr_strategy(game, after, adversary), active};
    case StrategyId::HorizontalReflection:
      return {hr_strategy(game, after, adversary, active.orientation), active};
    case StrategyId::MiddleA: return ma_strategy(game, after, adversary);
    case StrategyId::MiddleB: return mb_strategy(game, after, adversary);
    case StrategyId::Opening: return opening_strategy(game, after, adversary);
  }
  throw StrategyFailure("unknown strategy");
}

}  // namespace geodetic
