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

#include "geodetic/claims.hpp"

#include <algorithm>
#include <unordered_set>

#include "json.hpp"

#include "geodetic/errors.hpp"
#include "geodetic/tensor_game.hpp"

namespace geodetic {

namespace {

std::string state_key(const CompositeState& s, const ActiveStrategy& active) {
  std::string key;
  key.reserve(2 * s.board.size() + 4);
  for (int v : s.board.entries()) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>(v >> 8));
  }
  key.push_back(static_cast<char>(s.heap));
  key.push_back(static_cast<char>(active.id));
  key.push_back(static_cast<char>(active.orientation));
  return key;
}

class Verifier {
 public:
  Verifier(const CompositeGame& game, std::size_t limit, const ReplyObserver& observer)
      : game_(game), limit_(limit), observer_(observer) {}

  StrategyVerification run(const CompositeState& start, const ActiveStrategy& initial) {
    StrategyVerification result;
    result.pass = visit(start, initial);
    result.states_visited = visited_.size();
    if (!result.pass) result.witness = StrategyWitness{start, path_, reason_};
    return result;
  }

 private:
  // `s` has the adversary to move.
  bool visit(const CompositeState& s, const ActiveStrategy& active) {
    if (!visited_.insert(state_key(s, active)).second) return true;
    if (visited_.size() > limit_) {
      throw CapacityExceeded("strategy verification exceeded the state limit", visited_.size());
    }
    for (const auto& m : game_.moves(s)) {
      const CompositeState after = game_.apply(s, m);
      path_.push_back({false, m});
      if (game_.is_over(after)) return fail("the adversary made the last move");
      Reply reply;
      try {
        reply = respond(game_, active, after, m);
      } catch (const StrategyFailure& e) {
        return fail(e.what());
      }
      path_.push_back({true, reply.move});
      if (!game_.is_legal(after, reply.move)) return fail("the strategy's reply is illegal");
      const CompositeState next = game_.apply(after, reply.move);
      if (observer_) observer_(next, reply.next);
      if (!visit(next, reply.next)) return false;
      path_.pop_back();
      path_.pop_back();
    }
    return true;
  }

  bool fail(std::string reason) {
    reason_ = std::move(reason);
    return false;
  }

  const CompositeGame& game_;
  std::size_t limit_;
  const ReplyObserver& observer_;
  std::unordered_set<std::string> visited_;
  std::vector<PlayStep> path_;
  std::string reason_;
};

using Params = std::map<std::string, int>;

struct Family {
  std::string name;
  StrategyId strategy;
  GameKind kind;
  bool attach_star;
  Nim claimed_nim;
  std::vector<ParameterRange> defaults;
  // nullopt filters the parameter combination out.
  std::function<std::optional<RegionTensor>(const Params&)> build;
};

bool even(int v) { return v % 2 == 0; }
bool odd(int v) { return v % 2 != 0; }

std::optional<RegionTensor> cr_dnt_start(const Params& p) {
  int b = p.at("b"), d = p.at("d");
  return RegionTensor::matrix({{1, b, 1}, {d, 0, d}, {1, b, 1}});
}

std::optional<RegionTensor> cr_ter_start(const Params& p) {
  int a = p.at("a"), b = p.at("b"), c = p.at("c"), d = p.at("d"), e = p.at("e");
  if (!even(e)) return std::nullopt;
  auto t = RegionTensor::matrix({{a, b, c}, {d, e, d}, {c, b, a}});
  // A face summing to 1 hands the first player an immediate win.
  for (int sum : face_sums(t).sums) {
    if (sum < 2) return std::nullopt;
  }
  return t;
}

std::optional<RegionTensor> hr_start(const Params& p) {
  int a = p.at("a"), b = p.at("b"), c = p.at("c"), e = p.at("e"), o = p.at("o"), t = p.at("t");
  if (!even(e) || !odd(o) || !odd(t)) return std::nullopt;
  if (a + b + c < 2 || 2 * a + e < 2 || 2 * c + t < 2) return std::nullopt;
  return RegionTensor::matrix({{a, b, c}, {e, o, t}, {a, b, c}});
}

std::optional<RegionTensor> ma_start(const Params& p) {
  int b = p.at("b");
  return RegionTensor::matrix({{1, b, 1}, {0, 1, 0}, {1, b, 1}});
}

std::optional<RegionTensor> mb_start(const Params& p) {
  int a = p.at("a");
  return RegionTensor::matrix({{0, a, 1}, {1, 1, 1}, {1, a, 0}});
}

std::optional<RegionTensor> opening_start(const Params& p) {
  int b = p.at("b"), d = p.at("d");
  if (!odd(b) || !odd(d)) return std::nullopt;
  return RegionTensor::matrix({{1, b, 1}, {d, 1, d}, {1, b, 1}});
}

// Starting tensor of a three-dimensional lattice with its center emptied.
std::optional<RegionTensor> lattice_start(const Params& p) {
  int n1 = p.at("n1"), n2 = p.at("n2"), n3 = p.at("n3");
  if (n1 < 2 || !(n1 <= n2 && n2 <= n3) || n3 < 3) return std::nullopt;
  RegionTensor t = starting_tensor(std::vector<int>{n1, n2, n3});
  t[t.center_index()] = 0;
  return t;
}

const std::vector<Family>& families() {
  using S = StrategyId;
  static const std::vector<Family> kFamilies = {
      {"cr-dnt", S::CentralReflection, GameKind::Dnt, false, 0,
       {{"b", 0, 3}, {"d", 0, 3}}, cr_dnt_start},
      {"cr-ter-even", S::CentralReflection, GameKind::Ter, false, 0,
       {{"b", 0, 3}, {"d", 0, 3}}, cr_dnt_start},
      {"cr-ter", S::CentralReflection, GameKind::Ter, false, 0,
       {{"a", 0, 3}, {"b", 0, 3}, {"c", 0, 3}, {"d", 0, 3}, {"e", 0, 2}}, cr_ter_start},
      {"hr", S::HorizontalReflection, GameKind::Ter, false, 0,
       {{"a", 0, 2}, {"b", 0, 2}, {"c", 0, 2}, {"e", 0, 2}, {"o", 1, 3}, {"t", 3, 5}}, hr_start},
      {"hr-necessity", S::HorizontalReflection, GameKind::Ter, false, 0,
       {{"a", 0, 2}, {"b", 0, 2}, {"c", 0, 2}, {"e", 0, 2}, {"o", 1, 3}, {"t", 1, 1}}, hr_start},
      {"ma", S::MiddleA, GameKind::Ter, true, 1, {{"b", 2, 4}}, ma_start},
      {"mb", S::MiddleB, GameKind::Ter, true, 1, {{"a", 2, 4}}, mb_start},
      {"opening", S::Opening, GameKind::Ter, true, 1, {{"b", 1, 3}, {"d", 1, 3}}, opening_start},
      {"cr-dnt-lattice", S::CentralReflection, GameKind::Dnt, false, 0,
       {{"n1", 2, 3}, {"n2", 2, 3}, {"n3", 3, 3}}, lattice_start},
      {"cr-ter-lattice", S::CentralReflection, GameKind::Ter, false, 0,
       {{"n1", 2, 3}, {"n2", 2, 3}, {"n3", 3, 3}}, lattice_start},
  };
  return kFamilies;
}

const Family& family(const std::string& name) {
  for (const auto& f : families()) {
    if (f.name == name) return f;
  }
  throw InvalidInput("unknown claim family: " + name);
}

StrategyClaim claim_from_family(const Family& f) {
  return {f.name, f.name, f.kind, f.attach_star, f.claimed_nim, f.defaults};
}

// Calls `visit` on every parameter assignment within the bounds.
void enumerate(const std::vector<ParameterRange>& bounds, std::size_t i, Params& current,
               const std::function<void(const Params&)>& visit) {
  if (i == bounds.size()) {
    visit(current);
    return;
  }
  for (int v = bounds[i].lo; v <= bounds[i].hi; ++v) {
    current[bounds[i].name] = v;
    enumerate(bounds, i + 1, current, visit);
  }
}

StrategyClaim claim_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("family")) {
    throw InvalidInput("a claim needs a \"family\" field");
  }
  StrategyClaim claim = claim_from_family(family(doc.at("family").get<std::string>()));
  if (doc.contains("name")) claim.name = doc.at("name").get<std::string>();
  if (doc.contains("kind")) claim.kind = parse_game_kind(doc.at("kind").get<std::string>());
  if (doc.contains("attach_star")) claim.attach_star = doc.at("attach_star").get<bool>();
  if (doc.contains("claimed_nim")) claim.claimed_nim = doc.at("claimed_nim").get<Nim>();
  if (doc.contains("bounds")) {
    for (const auto& [key, range] : doc.at("bounds").items()) {
      auto it = std::find_if(claim.bounds.begin(), claim.bounds.end(),
                             [&](const ParameterRange& r) { return r.name == key; });
      if (it == claim.bounds.end()) throw InvalidInput("unknown parameter " + key);
      if (range.is_number_integer()) {
        it->lo = it->hi = range.get<int>();
      } else if (range.is_array() && range.size() == 2) {
        it->lo = range[0].get<int>();
        it->hi = range[1].get<int>();
      } else {
        throw InvalidInput("bounds for " + key + " must be an integer or [lo, hi]");
      }
      if (it->lo < 0 || it->lo > it->hi) throw InvalidInput("empty or negative range for " + key);
    }
  }
  return claim;
}

}  // namespace

StrategyVerification verify_strategy_from(const CompositeGame& game, const CompositeState& start,
                                          const ActiveStrategy& initial, std::size_t state_limit,
                                          const ReplyObserver& observer) {
  Verifier verifier(game, state_limit, observer);
  return verifier.run(start, initial);
}

std::vector<std::string> builtin_claim_names() {
  std::vector<std::string> names;
  for (const auto& f : families()) names.push_back(f.name);
  return names;
}

StrategyClaim builtin_claim(const std::string& name) { return claim_from_family(family(name)); }

std::vector<StrategyClaim> parse_claims_document(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("claims document: ") + e.what());
  }
  std::vector<StrategyClaim> claims;
  try {
    if (doc.is_array()) {
      for (const auto& item : doc) claims.push_back(claim_from_json(item));
    } else {
      claims.push_back(claim_from_json(doc));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("claims document: ") + e.what());
  }
  return claims;
}

ClaimReport verify_claim(const StrategyClaim& claim, std::size_t state_limit) {
  const Family& f = family(claim.family);
  ClaimReport report;
  report.claim = claim;
  report.strategy = f.strategy;
  const CompositeGame game(claim.kind);
  Params current;
  enumerate(claim.bounds, 0, current, [&](const Params& params) {
    auto start = f.build(params);
    if (!start) return;
    ClaimMember member{params, *start, false, 0, 0};
    ActiveStrategy initial{f.strategy, 0};
    if (f.strategy == StrategyId::HorizontalReflection) {
      initial.orientation = hr_orientation(*start).value_or(0);
    }
    CompositeState state{*start, claim.attach_star ? 1 : 0};
    auto verification = verify_strategy_from(game, state, initial, state_limit);
    member.strategy_pass = verification.pass;
    member.states_visited = verification.states_visited;
    report.states_visited += verification.states_visited;
    if (!verification.pass) {
      report.strategy_pass = false;
      if (!report.witness) report.witness = verification.witness;
    }
    member.computed_nim = tensor_nim(*start, claim.kind, true, state_limit).nim;
    if (member.computed_nim != claim.claimed_nim) report.nim_agrees = false;
    report.members.push_back(std::move(member));
  });
  return report;
}

}  // namespace geodetic
