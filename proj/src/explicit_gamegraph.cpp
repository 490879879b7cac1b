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

#include "geodetic/explicit_gamegraph.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>

#include "geodetic/errors.hpp"

namespace geodetic {

Gamegraph<int> ExplicitGamegraph::as_gamegraph() const {
  auto adjacency = std::make_shared<const std::vector<std::vector<int>>>(options);
  return {start, [adjacency](const int& p) { return (*adjacency)[p]; }};
}

namespace {

int parse_id(const std::string& token, int line_no) {
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || value < 0) {
    throw InvalidInput("line " + std::to_string(line_no) + ": bad position id '" + token + "'");
  }
  return value;
}

}  // namespace

ExplicitGamegraph parse_gamegraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int start = -1;
  std::vector<std::pair<int, std::vector<int>>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head)) continue;
    if (head == "start") {
      std::string id;
      if (!(tokens >> id) || start >= 0) {
        throw InvalidInput("line " + std::to_string(line_no) + ": bad start directive");
      }
      start = parse_id(id, line_no);
      continue;
    }
    std::string arrow;
    if (!(tokens >> arrow) || arrow != "->") {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected '<id> -> <ids>'");
    }
    std::vector<int> opts;
    for (std::string id; tokens >> id;) opts.push_back(parse_id(id, line_no));
    rows.emplace_back(parse_id(head, line_no), std::move(opts));
  }
  ExplicitGamegraph g;
  g.options.resize(rows.size());
  std::vector<bool> defined(rows.size(), false);
  for (auto& [id, opts] : rows) {
    if (id >= static_cast<int>(rows.size()) || defined[id]) {
      throw InvalidInput("position ids must be 0..n-1, each defined once");
    }
    defined[id] = true;
    g.options[id] = normalize_options(std::move(opts));
  }
  for (const auto& opts : g.options) {
    for (int q : opts) {
      if (q >= g.size()) throw InvalidInput("option " + std::to_string(q) + " is undefined");
    }
  }
  if (start < 0 || start >= g.size()) throw InvalidInput("missing or undefined start position");
  g.start = start;
  return g;
}

std::string format_gamegraph(const ExplicitGamegraph& g) {
  std::ostringstream out;
  out << "start " << g.start << "\n";
  for (int p = 0; p < g.size(); ++p) {
    out << p << " ->";
    for (int q : g.options[p]) out << ' ' << q;
    out << "\n";
  }
  return out.str();
}

ExplicitGamegraph gamegraph_fixture(std::string_view name) {
  if (name == "fig5") {
    // 0 is the top (nim 2); 1 terminal; 2 -> 3 terminal.
    return parse_gamegraph("start 0\n0 -> 1 2\n1 ->\n2 -> 3\n3 ->\n");
  }
  if (name == "fig6") {
    // A chain 0 -> 1 -> 2 -> 3 with the two skip arrows 0 -> 2 and 1 -> 3.
    return parse_gamegraph("start 0\n0 -> 1 2\n1 -> 2 3\n2 -> 3\n3 ->\n");
  }
  throw InvalidInput("unknown gamegraph fixture '" + std::string(name) + "'");
}

ExplicitGamegraph random_gamegraph(std::uint64_t seed, int max_positions) {
  if (max_positions < 1) throw InvalidInput("random gamegraph needs at least one position");
  std::mt19937_64 rng(seed);
  const int n = std::uniform_int_distribution<int>(1, max_positions)(rng);
  // Position 0 alone forms layer 0; the rest are cut into consecutive layers.
  std::vector<int> layer(n, 0);
  int current = 0;
  for (int p = 1; p < n; ++p) {
    if (p == 1 || std::bernoulli_distribution(0.4)(rng)) ++current;
    layer[p] = current;
  }
  ExplicitGamegraph g;
  g.options.resize(n);
  for (int p = 1; p < n; ++p) {
    std::vector<int> earlier;
    for (int q = 0; q < p; ++q) {
      if (layer[q] < layer[p]) earlier.push_back(q);
    }
    // One guaranteed parent keeps every position reachable.
    int parent = earlier[std::uniform_int_distribution<std::size_t>(0, earlier.size() - 1)(rng)];
    g.options[parent].push_back(p);
    for (int q : earlier) {
      if (q != parent && std::bernoulli_distribution(0.3)(rng)) g.options[q].push_back(p);
    }
  }
  for (auto& opts : g.options) opts = normalize_options(std::move(opts));
  return g;
}

}  // namespace geodetic
