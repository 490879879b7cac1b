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

#include "geodetic/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <queue>

#include "geodetic/errors.hpp"

namespace geodetic {

LatticeGraph::LatticeGraph(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InvalidInput("lattice needs at least one dimension");
  strides_.assign(dims_.size(), 1);
  for (int k = rank() - 1; k >= 0; --k) {
    if (dims_[k] < 2) {
      throw InvalidInput("lattice dimension " + std::to_string(dims_[k]) +
                         " is smaller than 2");
    }
    strides_[k] = vertex_count_;
    if (vertex_count_ > (1 << 24) / dims_[k]) throw InvalidInput("lattice too large");
    vertex_count_ *= dims_[k];
  }
}

LatticeGraph LatticeGraph::parse(std::string_view spec) {
  std::vector<int> dims;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = pos;
    while (end < spec.size() && std::tolower(static_cast<unsigned char>(spec[end])) != 'x') ++end;
    std::string_view token = spec.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidInput("bad lattice spec '" + std::string(spec) + "'");
    }
    dims.push_back(value);
    if (end == spec.size()) break;
    pos = end + 1;
  }
  return LatticeGraph(std::move(dims));
}

bool LatticeGraph::contains(const Coord& c) const {
  if (c.size() != dims_.size()) return false;
  for (int k = 0; k < rank(); ++k) {
    if (c[k] < 0 || c[k] >= dims_[k]) return false;
  }
  return true;
}

int LatticeGraph::index_of(const Coord& c) const {
  if (!contains(c)) {
    std::string text = "(";
    for (std::size_t k = 0; k < c.size(); ++k) text += (k ? "," : "") + std::to_string(c[k]);
    throw InvalidInput("coordinate " + text + ") is not a vertex of " + to_string());
  }
  int index = 0;
  for (int k = 0; k < rank(); ++k) index += c[k] * strides_[k];
  return index;
}

Coord LatticeGraph::coord_of(int index) const {
  Coord c(dims_.size());
  for (int k = 0; k < rank(); ++k) {
    c[k] = index / strides_[k];
    index %= strides_[k];
  }
  return c;
}

std::vector<int> LatticeGraph::neighbors(int index) const {
  std::vector<int> out;
  Coord c = coord_of(index);
  for (int k = 0; k < rank(); ++k) {
    if (c[k] > 0) out.push_back(index - strides_[k]);
    if (c[k] + 1 < dims_[k]) out.push_back(index + strides_[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string LatticeGraph::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k) out += 'x';
    out += std::to_string(dims_[k]);
  }
  return out;
}

VertexSet::VertexSet(int universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw InvalidInput("mask universe exceeds 64 vertices");
  VertexSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

int VertexSet::size() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int v = 0; v < universe_; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (int v = 0; v < universe_; ++v) {
    if (!contains(v)) out.insert(v);
  }
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw InvalidInput("vertex set has more than 64 vertices");
  return words_.empty() ? 0 : words_[0];
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet make_vertex_set(const LatticeGraph& g, std::span<const Coord> coords) {
  VertexSet s(g.vertex_count());
  for (const auto& c : coords) s.insert(g.index_of(c));
  return s;
}

std::vector<Coord> coords_of(const LatticeGraph& g, const VertexSet& s) {
  std::vector<Coord> out;
  for (int v : s.members()) out.push_back(g.coord_of(v));
  return out;
}

int distance(const LatticeGraph& g, const Coord& u, const Coord& v) {
  g.index_of(u);
  g.index_of(v);
  int d = 0;
  for (int k = 0; k < g.rank(); ++k) d += std::abs(u[k] - v[k]);
  return d;
}

namespace {

// Every vertex of the box [lo, hi] (inclusive per axis).
VertexSet box(const LatticeGraph& g, const Coord& lo, const Coord& hi) {
  VertexSet s(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    Coord c = g.coord_of(v);
    bool inside = true;
    for (int k = 0; k < g.rank() && inside; ++k) inside = lo[k] <= c[k] && c[k] <= hi[k];
    if (inside) s.insert(v);
  }
  return s;
}

void require_nonempty(const VertexSet& s, const char* op) {
  if (s.empty()) throw InvalidInput(std::string(op) + " of the empty set is undefined");
}

}  // namespace

VertexSet interval(const LatticeGraph& g, const Coord& u, const Coord& v) {
  g.index_of(u);
  g.index_of(v);
  Coord lo(g.rank()), hi(g.rank());
  for (int k = 0; k < g.rank(); ++k) {
    lo[k] = std::min(u[k], v[k]);
    hi[k] = std::max(u[k], v[k]);
  }
  return box(g, lo, hi);
}

std::vector<int> bfs_distances(const LatticeGraph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

VertexSet interval_by_search(const LatticeGraph& g, const Coord& u, const Coord& v) {
  auto from_u = bfs_distances(g, g.index_of(u));
  auto from_v = bfs_distances(g, g.index_of(v));
  int target = from_u[g.index_of(v)];
  VertexSet s(g.vertex_count());
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (from_u[w] + from_v[w] == target) s.insert(w);
  }
  return s;
}

VertexSet geodetic_closure(const LatticeGraph& g, const VertexSet& s) {
  require_nonempty(s, "geodetic closure");
  auto members = s.members();
  VertexSet out = s;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      out |= interval(g, g.coord_of(members[i]), g.coord_of(members[j]));
    }
  }
  return out;
}

VertexSet convex_hull(const LatticeGraph& g, const VertexSet& s) {
  require_nonempty(s, "convex hull");
  Coord lo = g.dims(), hi(g.rank(), -1);
  for (int v : s.members()) {
    Coord c = g.coord_of(v);
    for (int k = 0; k < g.rank(); ++k) {
      lo[k] = std::min(lo[k], c[k]);
      hi[k] = std::max(hi[k], c[k]);
    }
  }
  return box(g, lo, hi);
}

VertexSet convex_hull_by_closure(const LatticeGraph& g, const VertexSet& s) {
  VertexSet current = s;
  while (true) {
    VertexSet next = geodetic_closure(g, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<VertexSet> facets(const LatticeGraph& g) {
  std::vector<VertexSet> out(2 * g.rank(), VertexSet(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    Coord c = g.coord_of(v);
    for (int k = 0; k < g.rank(); ++k) {
      if (c[k] == 0) out[2 * k].insert(v);
      if (c[k] == g.dim(k) - 1) out[2 * k + 1].insert(v);
    }
  }
  return out;
}

bool hull_is_full(const LatticeGraph& g, const VertexSet& s) {
  for (const auto& facet : facets(g)) {
    if (!s.intersects(facet)) return false;
  }
  return true;
}

std::vector<std::vector<int>> box_automorphisms(const std::vector<int>& dims) {
  LatticeGraph g(dims);
  const int d = g.rank();
  std::vector<int> axes(d);
  std::iota(axes.begin(), axes.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool valid = true;
    for (int k = 0; k < d; ++k) valid = valid && dims[axes[k]] == dims[k];
    if (!valid) continue;
    for (unsigned flips = 0; flips < (1u << d); ++flips) {
      std::vector<int> perm(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) {
        Coord c = g.coord_of(v);
        Coord image(d);
        for (int k = 0; k < d; ++k) {
          image[k] = c[axes[k]];
          if (flips >> k & 1u) image[k] = dims[k] - 1 - image[k];
        }
        perm[v] = g.index_of(image);
      }
      out.push_back(std::move(perm));
    }
  } while (std::next_permutation(axes.begin(), axes.end()));
  return out;
}

}  // namespace geodetic
