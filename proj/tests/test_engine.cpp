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

#include <bit>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "geodetic/errors.hpp"
#include "geodetic/explicit_gamegraph.hpp"
#include "geodetic/gamegraph.hpp"
#include "geodetic/removal_game.hpp"

using namespace geodetic;

namespace {

std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(GEODETIC_FIXTURE_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Grundy values by repeated relaxation over an explicit DAG: a position's
// value is fixed once all its options are fixed.
std::vector<Nim> grundy_by_sweeps(const ExplicitGamegraph& g) {
  std::vector<int> value(g.size(), -1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < g.size(); ++p) {
      if (value[p] >= 0) continue;
      std::vector<bool> seen(g.size() + 1, false);
      bool ready = true;
      for (int q : g.options[p]) {
        if (value[q] < 0) ready = false;
        else seen[value[q]] = true;
      }
      if (!ready) continue;
      int m = 0;
      while (seen[m]) ++m;
      value[p] = m;
      changed = true;
    }
  }
  return {value.begin(), value.end()};
}

}  // namespace

TEST_CASE("mex and nim sums") {
  CHECK(mex(std::vector<Nim>{}) == 0);
  CHECK(mex(std::vector<Nim>{0, 1, 3}) == 2);
  CHECK(mex(std::vector<Nim>{1, 2}) == 0);
  CHECK(mex(std::vector<Nim>{2, 0, 0, 1}) == 3);
  CHECK(nim_sum(2, 1) == 3);
  CHECK(nim_sum(3, 3) == 0);
  CHECK(parity(12) == 0);
  CHECK(parity(15) == 1);
}

TEST_CASE("gamegraph text format") {
  auto g = parse_gamegraph(fixture_text("fig5.gg"));
  CHECK(g.start == 0);
  CHECK(g.size() == 4);
  CHECK(parse_gamegraph(format_gamegraph(g)).options == g.options);
  CHECK(format_gamegraph(gamegraph_fixture("fig6")) ==
        format_gamegraph(parse_gamegraph(fixture_text("fig6.gg"))));
  CHECK_THROWS_AS(parse_gamegraph("start 0\n0 -> 5\n"), InvalidInput);
  CHECK_THROWS_AS(parse_gamegraph("0 -> 1\n"), InvalidInput);
  CHECK_THROWS_AS(gamegraph_fixture("fig7"), InvalidInput);
}

TEST_CASE("cycles are rejected during evaluation") {
  auto g = parse_gamegraph(fixture_text("cycle.gg")).as_gamegraph();
  CHECK_THROWS_AS(nim_of(g), CycleDetected);
  CHECK_THROWS_AS(naive_nim(g, 0), CycleDetected);
}

TEST_CASE("position limit") {
  auto g = path_game(50);
  CHECK_THROWS_AS(NimSolver<int>(g, 10).nim(), CapacityExceeded);
  CHECK(NimSolver<int>(g, 51).nim() == 0);
}

TEST_CASE("two-move fixture") {
  auto g = gamegraph_fixture("fig5").as_gamegraph();
  CHECK(nim_of(g) == 2);
  CHECK(nim_of(g, 3) == 0);
  CHECK(outcome(g) == Outcome::FirstWins);
  CHECK(nim_of(disjunctive_sum(g, path_game(3))) == 3);
  CHECK(nim_of(delayed_product(g, 3)) == 1);
  CHECK(nim_of(disjunctive_sum(g, path_game(0))) == 2);
  auto report = verify_delay_identities(g, 3);
  CHECK(report.pass);
  CHECK(report.positions_checked == 4);
}

TEST_CASE("delay fixture") {
  auto g = gamegraph_fixture("fig6").as_gamegraph();
  NimSolver<std::pair<int, int>> delayed(delayed_product(g, 2));
  const Nim expected[3][4] = {{0, 2, 1, 0}, {3, 1, 2, 0}, {0, 2, 1, 0}};
  for (int r = 0; r <= 2; ++r) {
    for (int p = 0; p < 4; ++p) CHECK(delayed.nim({p, r}) == expected[r][p]);
  }
  CHECK(nim_of(g) == 0);
  CHECK(verify_delay_identities(g, 2).pass);
}

TEST_CASE("delayed game with no delay is the game itself") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = random_gamegraph(seed, 10).as_gamegraph();
    NimSolver<int> plain(g);
    NimSolver<std::pair<int, int>> delayed(delayed_product(g, 0));
    for (int p : reachable_positions(g)) CHECK(plain.nim(p) == delayed.nim({p, 0}));
  }
}

TEST_CASE("path games") {
  for (int k = 0; k < 8; ++k) CHECK(nim_of(path_game(k)) == parity(k));
}

TEST_CASE("memoized evaluation matches independent oracles") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto explicit_graph = random_gamegraph(seed, 12);
    auto g = explicit_graph.as_gamegraph();
    auto sweeps = grundy_by_sweeps(explicit_graph);
    NimSolver<int> solver(g);
    for (int p : reachable_positions(g)) {
      CHECK(solver.nim(p) == sweeps[p]);
      CHECK(naive_nim(g, p) == sweeps[p]);
    }
  }
}

TEST_CASE("random gamegraphs are single-source and deterministic") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = random_gamegraph(seed, 12);
    CHECK(g.size() <= 12);
    CHECK(static_cast<int>(reachable_positions(g.as_gamegraph()).size()) == g.size());
    CHECK(format_gamegraph(g) == format_gamegraph(random_gamegraph(seed, 12)));
  }
}

TEST_CASE("sum nim is the xor of the parts") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto a = random_gamegraph(seed, 8);
    auto b = random_gamegraph(seed + 1000, 8);
    auto sa = grundy_by_sweeps(a), sb = grundy_by_sweeps(b);
    auto sum = disjunctive_sum(a.as_gamegraph(), b.as_gamegraph());
    CHECK(nim_of(sum) == (sa[a.start] ^ sb[b.start]));
  }
}

TEST_CASE("delay identities on random gamegraphs") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto g = random_gamegraph(seed, 12).as_gamegraph();
    const int k = 1 + static_cast<int>(seed % 4);
    CHECK(verify_delay_identities(g, k).pass);
    // Direct recursion on the delayed product, without the memo table.
    auto delayed = delayed_product(g, k);
    for (int p : reachable_positions(g)) {
      const Nim one = naive_nim(delayed, {p, 1});
      for (int r = 0; r <= k; ++r) {
        CHECK(naive_nim(delayed, {p, r}) == (r % 2 == 0 ? naive_nim(g, p) : one));
      }
    }
  }
}

TEST_CASE("option preserving maps") {
  auto g = gamegraph_fixture("fig6").as_gamegraph();
  std::function<int(const int&)> identity = [](const int& p) { return p; };
  auto report = verify_option_preserving(g, g, identity);
  CHECK(report.pass);
  CHECK(report.positions_checked == 4);

  std::function<int(const int&)> outside = [](const int& p) { return p + 10; };
  CHECK_THROWS_AS(verify_option_preserving(g, g, outside), InvalidMap);

  // Nim-preserving bijections of sums: G + H to H + G.
  auto h = gamegraph_fixture("fig5").as_gamegraph();
  std::function<std::pair<int, int>(const std::pair<int, int>&)> swap =
      [](const std::pair<int, int>& p) { return std::make_pair(p.second, p.first); };
  CHECK(verify_option_preserving(disjunctive_sum(g, h), disjunctive_sum(h, g), swap).pass);
}

TEST_CASE("collapsing two different positions breaks option preservation") {
  RemovalGame game(LatticeGraph({2, 3}), GameKind::Dnt);
  auto g = game.gamegraph();
  auto positions = reachable_positions(g);
  // Find two positions with the same number of selected vertices that no
  // symmetry relates, and merge the first into the second.
  std::optional<std::pair<Selection, Selection>> pair;
  for (Selection a : positions) {
    for (Selection b : positions) {
      if (!pair && std::popcount(a) == 2 && std::popcount(b) == 2 &&
          game.canonical_form(a) != game.canonical_form(b)) {
        pair = {a, b};
      }
    }
  }
  REQUIRE(pair);
  std::function<Selection(const Selection&)> collapse = [&](const Selection& p) {
    return p == pair->first ? pair->second : p;
  };
  auto report = verify_option_preserving(g, g, collapse);
  CHECK_FALSE(report.pass);
  REQUIRE(report.witness);
  const auto& w = *report.witness;
  CHECK((!w.missing.empty() || !w.extra.empty() || w.nim_mismatch));
}
