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

#ifndef GEODETIC_GAMEGRAPH_HPP
#define GEODETIC_GAMEGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "geodetic/errors.hpp"

namespace geodetic {

using Nim = std::uint32_t;

inline constexpr std::size_t kDefaultPositionLimit = 50'000'000;

// Least nonnegative integer not in values. Duplicates are allowed.
inline Nim mex(std::span<const Nim> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (Nim v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  Nim m = 0;
  while (seen[m]) ++m;
  return m;
}

constexpr Nim nim_sum(Nim a, Nim b) { return a ^ b; }
constexpr Nim parity(long long n) { return static_cast<Nim>(n & 1); }

enum class Outcome { FirstWins, SecondWins };

inline const char* to_string(Outcome o) {
  return o == Outcome::FirstWins ? "first" : "second";
}

template <class T>
struct PositionHash {
  std::size_t operator()(const T& v) const { return std::hash<T>{}(v); }
};

template <class A, class B>
struct PositionHash<std::pair<A, B>> {
  std::size_t operator()(const std::pair<A, B>& p) const {
    std::size_t h = PositionHash<A>{}(p.first);
    return h ^ (PositionHash<B>{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

template <class T>
std::string describe_position(const T& p) {
  if constexpr (requires(std::ostream& os) { os << p; }) {
    std::ostringstream os;
    os << p;
    return os.str();
  } else {
    return "<position>";
  }
}

template <class A, class B>
std::string describe_position(const std::pair<A, B>& p) {
  return "(" + describe_position(p.first) + "," + describe_position(p.second) + ")";
}

// A game given by its starting position and option function. Positions must
// be hashable (PositionHash) and totally ordered; options() returns each
// option once, in ascending order.
template <class Position>
struct Gamegraph {
  Position start;
  std::function<std::vector<Position>(const Position&)> options;
};

template <class Position>
std::vector<Position> normalize_options(std::vector<Position> opts) {
  std::sort(opts.begin(), opts.end());
  opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
  return opts;
}

// Memoized mex recursion. Cycles are detected lazily during evaluation.
template <class Position, class Hash = PositionHash<Position>>
class NimSolver {
 public:
  explicit NimSolver(Gamegraph<Position> game, std::size_t position_limit = kDefaultPositionLimit)
      : game_(std::move(game)), limit_(position_limit) {}

  Nim nim(const Position& p) { return evaluate(p); }
  Nim nim() { return evaluate(game_.start); }
  std::size_t positions_explored() const { return memo_.size(); }
  const Gamegraph<Position>& game() const { return game_; }

 private:
  Nim evaluate(const Position& p) {
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    if (!on_path_.insert(p).second) throw CycleDetected(describe_position(p));
    // Positions on the current path count too: a deep first descent has
    // not memoized anything yet.
    if (memo_.size() + on_path_.size() > limit_) {
      throw CapacityExceeded("position limit of " + std::to_string(limit_) + " reached",
                             memo_.size() + on_path_.size());
    }
    std::vector<Position> opts = game_.options(p);
    std::vector<Nim> values;
    values.reserve(opts.size());
    for (const auto& q : opts) values.push_back(evaluate(q));
    on_path_.erase(p);
    Nim value = mex(values);
    memo_.emplace(p, value);
    return value;
  }

  Gamegraph<Position> game_;
  std::size_t limit_;
  std::unordered_map<Position, Nim, Hash> memo_;
  std::unordered_set<Position, Hash> on_path_;
};

template <class Position>
Nim nim_of(const Gamegraph<Position>& game, const Position& p) {
  return NimSolver<Position>(game).nim(p);
}

template <class Position>
Nim nim_of(const Gamegraph<Position>& game) {
  return nim_of(game, game.start);
}

namespace detail {

template <class Position>
Nim naive_nim(const Gamegraph<Position>& game, const Position& p, std::vector<Position>& path,
              std::size_t& visits, std::size_t limit) {
  if (std::find(path.begin(), path.end(), p) != path.end()) {
    throw CycleDetected(describe_position(p));
  }
  if (++visits > limit) {
    throw CapacityExceeded("naive evaluation visited " + std::to_string(limit) + " nodes", visits);
  }
  path.push_back(p);
  std::vector<Nim> values;
  for (const auto& q : game.options(p)) values.push_back(naive_nim(game, q, path, visits, limit));
  path.pop_back();
  return mex(values);
}

}  // namespace detail

// Plain recursion without a memo table; exponential, for cross-checks only.
template <class Position>
Nim naive_nim(const Gamegraph<Position>& game, const Position& p,
              std::size_t visit_limit = kDefaultPositionLimit, std::size_t* visits_out = nullptr) {
  std::vector<Position> path;
  std::size_t visits = 0;
  Nim value = detail::naive_nim(game, p, path, visits, visit_limit);
  if (visits_out) *visits_out = visits;
  return value;
}

template <class Position>
Outcome outcome(const Gamegraph<Position>& game) {
  return nim_of(game) != 0 ? Outcome::FirstWins : Outcome::SecondWins;
}

// Every position reachable from start, in breadth-first order with options
// visited in their ascending order.
template <class Position, class Hash = PositionHash<Position>>
std::vector<Position> reachable_positions(const Gamegraph<Position>& game,
                                          std::size_t limit = kDefaultPositionLimit) {
  std::vector<Position> order{game.start};
  std::unordered_set<Position, Hash> seen{game.start};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& q : game.options(order[i])) {
      if (seen.insert(q).second) {
        if (order.size() >= limit) {
          throw CapacityExceeded("reachable set exceeds " + std::to_string(limit), order.size());
        }
        order.push_back(q);
      }
    }
  }
  return order;
}

// D_k: positions k, k-1, ..., 0 with Opt(i) = {i-1}.
inline Gamegraph<int> path_game(int k) {
  if (k < 0) throw InvalidInput("path game length must be nonnegative");
  return {k, [](const int& i) { return i > 0 ? std::vector<int>{i - 1} : std::vector<int>{}; }};
}

// G + H: a move is made in exactly one component.
template <class P, class Q>
Gamegraph<std::pair<P, Q>> disjunctive_sum(Gamegraph<P> g, Gamegraph<Q> h) {
  auto start = std::make_pair(g.start, h.start);
  return {start, [g = std::move(g), h = std::move(h)](const std::pair<P, Q>& pq) {
            std::vector<std::pair<P, Q>> out;
            for (const auto& p : g.options(pq.first)) out.emplace_back(p, pq.second);
            for (const auto& q : h.options(pq.second)) out.emplace_back(pq.first, q);
            return normalize_options(std::move(out));
          }};
}

// G delayed by D_k: like G + D_k, but no delay move once G is terminal.
template <class P>
Gamegraph<std::pair<P, int>> delayed_product(Gamegraph<P> g, int k) {
  auto delay = path_game(k);
  auto start = std::make_pair(g.start, k);
  return {start, [g = std::move(g), delay](const std::pair<P, int>& pr) {
            std::vector<std::pair<P, int>> out;
            auto opts = g.options(pr.first);
            for (const auto& q : opts) out.emplace_back(q, pr.second);
            if (!opts.empty()) {
              for (int s : delay.options(pr.second)) out.emplace_back(pr.first, s);
            }
            return normalize_options(std::move(out));
          }};
}

template <class Position>
struct DelayViolation {
  Position position;
  int delay = 0;
  Nim expected = 0;
  Nim actual = 0;
};

template <class Position>
struct DelayReport {
  bool pass = true;
  std::size_t positions_checked = 0;
  std::vector<DelayViolation<Position>> violations;
};

// Checks nim(p, 2r) = nim(p) and nim(p, 2r+1) = nim(p, 1) in G delayed by
// D_kmax, for every reachable p of G and every delay value up to kmax.
template <class Position>
DelayReport<Position> verify_delay_identities(const Gamegraph<Position>& g, int kmax) {
  DelayReport<Position> report;
  auto positions = reachable_positions(g);
  NimSolver<Position> plain(g);
  NimSolver<std::pair<Position, int>> delayed(delayed_product(g, kmax));
  for (const auto& p : positions) {
    const Nim base = plain.nim(p);
    const Nim odd = kmax >= 1 ? delayed.nim({p, 1}) : 0;
    for (int r = 0; r <= kmax; ++r) {
      const Nim expected = (r % 2 == 0) ? base : odd;
      const Nim actual = delayed.nim({p, r});
      if (actual != expected) report.violations.push_back({p, r, expected, actual});
    }
    ++report.positions_checked;
  }
  report.pass = report.violations.empty();
  return report;
}

// Evidence that beta is not option preserving at source.
template <class P, class Q>
struct MapWitness {
  P source;
  Q image;
  std::vector<Q> missing;  // options of beta(source) not hit by beta(Opt(source))
  std::vector<Q> extra;    // beta(Opt(source)) outside Opt(beta(source))
  std::optional<std::pair<Nim, Nim>> nim_mismatch;  // (nim(source), nim(image))
};

template <class P, class Q>
struct OptionPreservingReport {
  bool pass = true;
  std::size_t positions_checked = 0;
  std::optional<MapWitness<P, Q>> witness;
};

// Checks Opt_H(beta(p)) = beta(Opt_G(p)) for every reachable p of G and, when
// that holds everywhere, that nim(beta(p)) = nim(p).
template <class P, class Q>
OptionPreservingReport<P, Q> verify_option_preserving(const Gamegraph<P>& g,
                                                      const Gamegraph<Q>& h,
                                                      const std::function<Q(const P&)>& beta) {
  OptionPreservingReport<P, Q> report;
  auto sources = reachable_positions(g);
  auto targets = reachable_positions(h);
  std::unordered_set<Q, PositionHash<Q>> in_h(targets.begin(), targets.end());
  for (const auto& p : sources) {
    const Q image = beta(p);
    if (!in_h.count(image)) {
      throw InvalidMap("image of " + describe_position(p) + " is not a position of the target");
    }
    std::vector<Q> mapped;
    for (const auto& q : g.options(p)) mapped.push_back(beta(q));
    mapped = normalize_options(std::move(mapped));
    const std::vector<Q> expected = h.options(image);
    ++report.positions_checked;
    if (mapped != expected) {
      MapWitness<P, Q> w{p, image, {}, {}, std::nullopt};
      std::set_difference(expected.begin(), expected.end(), mapped.begin(), mapped.end(),
                          std::back_inserter(w.missing));
      std::set_difference(mapped.begin(), mapped.end(), expected.begin(), expected.end(),
                          std::back_inserter(w.extra));
      report.pass = false;
      report.witness = std::move(w);
      return report;
    }
  }
  NimSolver<P> source_nims(g);
  NimSolver<Q> target_nims(h);
  for (const auto& p : sources) {
    const Q image = beta(p);
    Nim a = source_nims.nim(p), b = target_nims.nim(image);
    if (a != b) {
      report.pass = false;
      report.witness = MapWitness<P, Q>{p, image, {}, {}, std::make_pair(a, b)};
      return report;
    }
  }
  return report;
}

}  // namespace geodetic

#endif  // GEODETIC_GAMEGRAPH_HPP
