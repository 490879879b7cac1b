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

#ifndef GEODETIC_CLAIMS_HPP
#define GEODETIC_CLAIMS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geodetic/gamegraph.hpp"
#include "geodetic/strategies.hpp"

namespace geodetic {

struct PlayStep {
  bool by_strategy = false;
  MoveResponse move;
};

// A play from `start` ending where the strategy lost or had no legal answer.
struct StrategyWitness {
  CompositeState start;
  std::vector<PlayStep> play;
  std::string reason;
};

struct StrategyVerification {
  bool pass = true;
  std::size_t states_visited = 0;
  std::optional<StrategyWitness> witness;
};

// Called on every position reached right after a strategy reply.
using ReplyObserver = std::function<void(const CompositeState&, const ActiveStrategy&)>;

// Plays every adversary line from `start` (adversary to move) against the
// strategy. Passes iff the strategy always answers legally and the adversary
// never makes the last move.
StrategyVerification verify_strategy_from(const CompositeGame& game, const CompositeState& start,
                                          const ActiveStrategy& initial,
                                          std::size_t state_limit = kDefaultPositionLimit,
                                          const ReplyObserver& observer = {});

struct ParameterRange {
  std::string name;
  int lo = 0;
  int hi = 0;
};

// A family of starting tensors on which a strategy is claimed to win for
// the second player, so the tensor's nim is `claimed_nim` (0, or 1 when the
// strategy plays the sum with *1).
struct StrategyClaim {
  std::string name;
  std::string family;
  GameKind kind = GameKind::Ter;
  bool attach_star = false;
  Nim claimed_nim = 0;
  std::vector<ParameterRange> bounds;
};

std::vector<std::string> builtin_claim_names();
StrategyClaim builtin_claim(const std::string& name);
// {"family": "ma", "bounds": {"b": [2, 6]}, "kind": "ter", "attach_star": true,
//  "claimed_nim": 1}; a top-level array holds several claims. Omitted fields
// take the family defaults.
std::vector<StrategyClaim> parse_claims_document(std::string_view json_text);

struct ClaimMember {
  std::map<std::string, int> parameters;
  RegionTensor start;
  bool strategy_pass = false;
  std::size_t states_visited = 0;
  Nim computed_nim = 0;
};

struct ClaimReport {
  StrategyClaim claim;
  StrategyId strategy = StrategyId::CentralReflection;
  bool strategy_pass = true;
  bool nim_agrees = true;
  std::size_t states_visited = 0;
  std::vector<ClaimMember> members;
  std::optional<StrategyWitness> witness;  // first failing member
  bool pass() const { return strategy_pass && nim_agrees && !members.empty(); }
};

// Verifies the strategy on every member and cross-checks each member's nim by
// exhaustive search.
ClaimReport verify_claim(const StrategyClaim& claim, std::size_t state_limit = kDefaultPositionLimit);

}  // namespace geodetic

#endif  // GEODETIC_CLAIMS_HPP
