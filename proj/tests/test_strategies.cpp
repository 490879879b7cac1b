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

#include "doctest.h"
#include "geodetic/claims.hpp"
#include "geodetic/errors.hpp"
#include "geodetic/strategies.hpp"

using namespace geodetic;
using namespace geodetic::compass;

namespace {

RegionTensor M(std::initializer_list<std::initializer_list<int>> rows) {
  return RegionTensor::matrix(rows);
}

// Plays `adversary` from s and returns the strategy's answer.
Reply answer(const CompositeGame& game, const ActiveStrategy& active, const CompositeState& s,
             const MoveResponse& adversary) {
  return respond(game, active, game.apply(s, adversary), adversary);
}

const ActiveStrategy kCR{StrategyId::CentralReflection, 0};

bool centrally_symmetric(const RegionTensor& t) {
  for (int i = 0; i < t.size(); ++i) {
    if (t[i] != t[t.reflect_index(i)]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("composite game moves") {
  CompositeGame ter(GameKind::Ter);
  CompositeState s{M({{1, 0, 1}, {0, 0, 0}, {1, 0, 1}}), 1};
  auto moves = ter.moves(s);
  REQUIRE(moves.size() == 5);
  CHECK(moves.back() == MoveResponse::heap());
  CompositeState dead{M({{0, 0, 0}, {0, 1, 0}, {1, 1, 1}}), 1};
  CHECK(ter.moves(dead) == std::vector<MoveResponse>{MoveResponse::heap()});
  CHECK(ter.board_finished(dead.board));
  CHECK_THROWS_AS(ter.apply(dead, MoveResponse::at(C)), ContractViolation);
  CHECK(ter.undo(ter.apply(s, MoveResponse::at(NW)), MoveResponse::at(NW)) == s);

  CompositeGame dnt(GameKind::Dnt);
  CHECK(dnt.moves({M({{1, 0, 1}, {0, 0, 0}, {1, 0, 1}}), 0}).size() == 4);
  CHECK(dnt.moves({M({{0, 0, 1}, {0, 0, 0}, {1, 0, 1}}), 0}) ==
        std::vector<MoveResponse>{MoveResponse::at(SE)});
}

TEST_CASE("move names") {
  CHECK(describe_move(MoveResponse::at(NW), 2) == "NW");
  CHECK(describe_move(MoveResponse::at(C), 2) == "C");
  CHECK(describe_move(MoveResponse::heap(), 2) == "*1");
  CHECK(describe_move(MoveResponse::at(13), 3) == "(1,1,1)");
}

TEST_CASE("central reflection") {
  CompositeGame dnt(GameKind::Dnt);
  CompositeState corners{M({{1, 1, 1}, {0, 0, 0}, {1, 1, 1}}), 0};
  CHECK(answer(dnt, kCR, corners, MoveResponse::at(NW)).move == MoveResponse::at(SE));

  CompositeGame ter(GameKind::Ter);
  CompositeState sym{M({{2, 1, 0}, {3, 0, 3}, {0, 1, 2}}), 0};
  for (const auto& m : ter.moves(sym)) {
    CompositeState after = ter.apply(sym, m);
    Reply r = respond(ter, kCR, after, m);
    CompositeState next = ter.apply(after, r.move);
    if (!ter.is_over(next)) CHECK(centrally_symmetric(next.board));
  }
  // The adversary empties NW's neighbour on the top edge to 1: take the win.
  CompositeState thin{M({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}), 0};
  Reply win = answer(ter, kCR, thin, MoveResponse::at(N));
  CHECK(win.move == MoveResponse::at(NW));
  CHECK(ter.is_over(ter.apply(ter.apply(thin, MoveResponse::at(N)), win.move)));
}

TEST_CASE("horizontal reflection") {
  CompositeGame ter(GameKind::Ter);
  CompositeState s{M({{1, 1, 1}, {0, 1, 3}, {1, 1, 1}}), 0};
  auto orientation = hr_orientation(s.board);
  REQUIRE(orientation);
  CHECK(*orientation == 0);
  ActiveStrategy hr{StrategyId::HorizontalReflection, *orientation};
  CHECK(answer(ter, hr, s, MoveResponse::at(E)).move == MoveResponse::at(C));
  CHECK(answer(ter, hr, s, MoveResponse::at(NW)).move == MoveResponse::at(SW));
  // The same board turned a quarter: the orientation follows it.
  RegionTensor turned = M({{1, 0, 1}, {1, 1, 1}, {1, 3, 1}});
  auto turned_orientation = hr_orientation(turned);
  REQUIRE(turned_orientation);
  ActiveStrategy hr_turned{StrategyId::HorizontalReflection, *turned_orientation};
  CHECK(answer(ter, hr_turned, {turned, 0}, MoveResponse::at(S)).move == MoveResponse::at(C));
  CHECK_FALSE(hr_orientation(M({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})));
}

TEST_CASE("middle games and opening") {
  CompositeGame ter(GameKind::Ter);
  CompositeState a{M({{1, 2, 1}, {0, 1, 0}, {1, 2, 1}}), 1};
  Reply r = answer(ter, {StrategyId::MiddleA, 0}, a, MoveResponse::heap());
  CHECK(r.move == MoveResponse::at(C));
  CHECK(r.next.id == StrategyId::CentralReflection);
  // Mirror images of the table entries are covered too.
  CHECK(answer(ter, {StrategyId::MiddleA, 0}, a, MoveResponse::at(SW)).move == MoveResponse::at(SE));

  CompositeState b{M({{0, 2, 1}, {1, 1, 1}, {1, 2, 0}}), 1};
  CHECK(answer(ter, {StrategyId::MiddleB, 0}, b, MoveResponse::at(W)).move == MoveResponse::at(NE));
  CHECK(answer(ter, {StrategyId::MiddleB, 0}, b, MoveResponse::at(C)).move == MoveResponse::heap());

  CompositeState o{M({{1, 3, 1}, {3, 1, 3}, {1, 3, 1}}), 1};
  ActiveStrategy opening{StrategyId::Opening, 0};
  Reply c = answer(ter, opening, o, MoveResponse::at(C));
  CHECK(c.move == MoveResponse::heap());
  CHECK(c.next.id == StrategyId::CentralReflection);
  Reply w = answer(ter, opening, o, MoveResponse::at(W));
  CHECK(w.move == MoveResponse::heap());
  CHECK(w.next.id == StrategyId::HorizontalReflection);
  CompositeState o1{M({{1, 3, 1}, {1, 1, 1}, {1, 3, 1}}), 1};
  Reply w1 = answer(ter, opening, o1, MoveResponse::at(W));
  CHECK(w1.move == MoveResponse::at(E));
  CHECK(w1.next.id == StrategyId::MiddleA);
  Reply nw = answer(ter, opening, o1, MoveResponse::at(NW));
  CHECK(nw.move == MoveResponse::at(SE));
  CHECK(nw.next.id == StrategyId::MiddleB);
}

TEST_CASE("strategies are deterministic") {
  CompositeGame ter(GameKind::Ter);
  CompositeState o{M({{1, 3, 1}, {3, 1, 3}, {1, 3, 1}}), 1};
  for (const auto& m : ter.moves(o)) {
    auto after = ter.apply(o, m);
    Reply x = respond(ter, {StrategyId::Opening, 0}, after, m);
    Reply y = respond(ter, {StrategyId::Opening, 0}, after, m);
    CHECK(x.move == y.move);
    CHECK(x.next == y.next);
  }
}

TEST_CASE("central reflection keeps DNT positions symmetric") {
  CompositeGame dnt(GameKind::Dnt);
  std::size_t seen = 0;
  for (int b = 0; b <= 3; ++b) {
    for (int d = 0; d <= 3; ++d) {
      CompositeState start{M({{1, b, 1}, {d, 0, d}, {1, b, 1}}), 0};
      auto result = verify_strategy_from(dnt, start, kCR, 1'000'000,
                                         [&](const CompositeState& s, const ActiveStrategy&) {
                                           ++seen;
                                           CHECK(centrally_symmetric(s.board));
                                           CHECK(s.board.total() < start.board.total());
                                         });
      CHECK(result.pass);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("built-in claims") {
  auto names = builtin_claim_names();
  CHECK(names.size() == 10);
  for (std::string name : {"cr-dnt", "cr-ter-even", "hr", "ma", "mb", "opening"}) {
    CAPTURE(name);
    ClaimReport r = verify_claim(builtin_claim(name));
    CHECK(r.pass());
    CHECK(r.members.size() > 0);
    CHECK_FALSE(r.witness);
  }
  CHECK_THROWS_AS(builtin_claim("nope"), InvalidInput);
}

TEST_CASE("the horizontal reflection needs a long middle row") {
  ClaimReport r = verify_claim(builtin_claim("hr-necessity"));
  CHECK_FALSE(r.pass());
  REQUIRE(r.witness);
  // Replaying the witness must be legal and end with the adversary moving last.
  CompositeGame ter(GameKind::Ter);
  CompositeState s = r.witness->start;
  REQUIRE(!r.witness->play.empty());
  for (const auto& step : r.witness->play) {
    REQUIRE(ter.is_legal(s, step.move));
    s = ter.apply(s, step.move);
  }
  CHECK_FALSE(r.witness->play.back().by_strategy);
  CHECK(ter.is_over(s));
}

TEST_CASE("claims documents") {
  auto claims = parse_claims_document(R"([
    {"family": "ma", "bounds": {"b": [2, 6]}},
    {"family": "cr-dnt-lattice", "name": "small", "bounds": {"n1": 2, "n2": 2, "n3": 3}}
  ])");
  REQUIRE(claims.size() == 2);
  CHECK(claims[0].attach_star);
  CHECK(claims[0].claimed_nim == 1);
  CHECK(claims[0].bounds[0].hi == 6);
  CHECK(claims[1].name == "small");
  for (const auto& c : claims) CHECK(verify_claim(c).pass());

  auto wrong = parse_claims_document(R"({"family": "ma", "claimed_nim": 0})");
  ClaimReport r = verify_claim(wrong.front());
  CHECK(r.strategy_pass);
  CHECK_FALSE(r.nim_agrees);
  CHECK_FALSE(r.pass());

  CHECK_THROWS_AS(parse_claims_document(R"({"family": "zz"})"), InvalidInput);
  CHECK_THROWS_AS(parse_claims_document(R"({"family": "ma", "bounds": {"q": 1}})"), InvalidInput);
  CHECK_THROWS_AS(parse_claims_document(R"({"family": "ma", "bounds": {"b": [3, 1]}})"), InvalidInput);
  CHECK_THROWS_AS(parse_claims_document("{"), InvalidInput);
}

TEST_CASE("state limit") {
  CHECK_THROWS_AS(verify_claim(builtin_claim("hr"), 10), CapacityExceeded);
}
