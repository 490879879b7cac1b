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

#ifndef GEODETIC_REGION_TENSOR_HPP
#define GEODETIC_REGION_TENSOR_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geodetic/lattice.hpp"

namespace geodetic {

// Each lattice axis splits into three regions: the low end (index 0), the
// middle (1..n-2, possibly empty) and the high end (n-1).
enum Region : int { kLow = 0, kMid = 1, kHigh = 2 };

int region_of(int coordinate, int axis_length);

// A 3 x ... x 3 array of nonnegative counts, stored row-major over region
// tuples. Rank 2 is the 3x3 matrix game.
class RegionTensor {
 public:
  RegionTensor() = default;
  explicit RegionTensor(int rank);
  RegionTensor(int rank, std::vector<int> entries);
  // Rows top to bottom, 3 entries each.
  static RegionTensor matrix(std::initializer_list<std::initializer_list<int>> rows);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int flat) const { return entries_[flat]; }
  int& operator[](int flat) { return entries_[flat]; }
  int at(std::span<const int> regions) const { return entries_[flat_index(regions)]; }
  const std::vector<int>& entries() const { return entries_; }

  int flat_index(std::span<const int> regions) const;
  std::vector<int> regions_of(int flat) const;
  // The all-middle entry.
  int center_index() const { return (size() - 1) / 2; }
  int center() const { return entries_[center_index()]; }
  // Index reached by swapping low and high on every axis.
  int reflect_index(int flat) const { return size() - 1 - flat; }
  int total() const;
  int max_entry() const;

  auto operator<=>(const RegionTensor&) const = default;

 private:
  int rank_ = 0;
  std::vector<int> entries_;
};

// Sum of the entries whose region on `axis` equals `side` (kLow or kHigh).
// Stored at 2*axis + (side == kHigh). For matrices: r1, r3, c1, c3.
struct FaceSums {
  std::vector<int> sums;
  int low(int axis) const { return sums[2 * axis]; }
  int high(int axis) const { return sums[2 * axis + 1]; }
  bool all_positive() const;
};

FaceSums face_sums(const RegionTensor& t);
// Face slots (2*axis + side) containing the entry.
std::vector<int> faces_of_entry(const RegionTensor& t, int flat);

// Counts of unselected vertices per region.
RegionTensor alpha_project(const LatticeGraph& g, const VertexSet& selected);
RegionTensor starting_tensor(const LatticeGraph& g);
RegionTensor starting_tensor(const std::vector<int>& dims);

// "a,b,c;d,e,f;g,h,i"
RegionTensor parse_matrix(std::string_view literal);
// {"dims": [3,3,3], "entries": [...]} with row-major entries.
RegionTensor parse_tensor_document(std::string_view json_text);
std::string format_tensor(const RegionTensor& t);

}  // namespace geodetic

#endif  // GEODETIC_REGION_TENSOR_HPP
