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

#ifndef GEODETIC_EXPLICIT_GAMEGRAPH_HPP
#define GEODETIC_EXPLICIT_GAMEGRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "geodetic/gamegraph.hpp"

namespace geodetic {

// A gamegraph with positions 0..n-1 stored as adjacency lists.
//
// Text format, one directive per line, '#' starts a comment:
//
//   start 0
//   0 -> 1 2
//   1 -> 3
//   2 ->
//   3 ->
//
// Every position needs its own line. Option lists are sorted on load.
struct ExplicitGamegraph {
  int start = 0;
  std::vector<std::vector<int>> options;

  int size() const { return static_cast<int>(options.size()); }
  Gamegraph<int> as_gamegraph() const;
};

ExplicitGamegraph parse_gamegraph(std::string_view text);
std::string format_gamegraph(const ExplicitGamegraph& g);

// Named fixtures: "fig5" (a four-position game with nim 2) and "fig6" (a
// four-position game whose start has nim 0 but nim 3 after one delay step).
ExplicitGamegraph gamegraph_fixture(std::string_view name);

// Layered DAG with a single source and at most max_positions positions,
// every position reachable from the source. Deterministic in seed.
ExplicitGamegraph random_gamegraph(std::uint64_t seed, int max_positions);

}  // namespace geodetic

#endif  // GEODETIC_EXPLICIT_GAMEGRAPH_HPP
