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

#ifndef GEODETIC_LATTICE_HPP
#define GEODETIC_LATTICE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geodetic {

// Integer coordinates of a lattice vertex, ordered like the lattice dims.
using Coord = std::vector<int>;

// The box product P_{n_1} x ... x P_{n_d} of paths. Vertices are numbered
// row-major: the last axis varies fastest.
class LatticeGraph {
 public:
  explicit LatticeGraph(std::vector<int> dims);

  // Parses "n1xn2x...xnd" (case-insensitive 'x'). Every n_k must be >= 2.
  static LatticeGraph parse(std::string_view spec);

  int rank() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int axis) const { return dims_[axis]; }
  int vertex_count() const { return vertex_count_; }

  bool contains(const Coord& c) const;
  // Throws InvalidInput for coordinates outside the box.
  int index_of(const Coord& c) const;
  Coord coord_of(int index) const;
  std::vector<int> neighbors(int index) const;

  std::string to_string() const;

  bool operator==(const LatticeGraph& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<int> strides_;
  int vertex_count_ = 1;
};

// Membership over the vertices of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<int> members() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  VertexSet complement() const;
  // Requires universe() <= 64.
  std::uint64_t mask() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  bool operator==(const VertexSet& other) const = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

VertexSet make_vertex_set(const LatticeGraph& g, std::span<const Coord> coords);
std::vector<Coord> coords_of(const LatticeGraph& g, const VertexSet& s);

// Graph distance; for a box of paths this is the L1 distance.
int distance(const LatticeGraph& g, const Coord& u, const Coord& v);

// All vertices on some geodesic from u to v (the coordinate box they span).
VertexSet interval(const LatticeGraph& g, const Coord& u, const Coord& v);

// Oracle for interval(): w is on a geodesic iff d(u,w) + d(w,v) = d(u,v),
// with distances from breadth-first search over the graph's edges. Works for
// any graph given by neighbors(); kept for validating closed forms.
VertexSet interval_by_search(const LatticeGraph& g, const Coord& u, const Coord& v);
std::vector<int> bfs_distances(const LatticeGraph& g, int source);

// One round of adding every vertex on a geodesic between members of s.
VertexSet geodetic_closure(const LatticeGraph& g, const VertexSet& s);

// Smallest convex set containing s: the bounding coordinate box.
VertexSet convex_hull(const LatticeGraph& g, const VertexSet& s);

// Least fixpoint of geodetic_closure above s; agrees with convex_hull().
VertexSet convex_hull_by_closure(const LatticeGraph& g, const VertexSet& s);

// True iff s meets every facet, i.e. convex_hull(s) is the whole graph.
bool hull_is_full(const LatticeGraph& g, const VertexSet& s);

// Facet (axis k, side) is at position 2k + side, side 0 = low, 1 = high.
std::vector<VertexSet> facets(const LatticeGraph& g);

// Automorphisms of a box generated by reversing axes and permuting axes of
// equal length. Each entry maps row-major index i to perm[i]. The identity
// comes first.
std::vector<std::vector<int>> box_automorphisms(const std::vector<int>& dims);

}  // namespace geodetic

#endif  // GEODETIC_LATTICE_HPP
