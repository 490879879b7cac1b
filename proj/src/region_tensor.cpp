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

#include "geodetic/region_tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "geodetic/errors.hpp"
#include "json.hpp"

namespace geodetic {

namespace {

int pow3(int rank) {
  int n = 1;
  for (int k = 0; k < rank; ++k) n *= 3;
  return n;
}

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

int region_of(int coordinate, int axis_length) {
  if (coordinate == 0) return kLow;
  if (coordinate == axis_length - 1) return kHigh;
  return kMid;
}

RegionTensor::RegionTensor(int rank) : RegionTensor(rank, std::vector<int>(pow3(rank), 0)) {}

RegionTensor::RegionTensor(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank < 1 || rank > 6) throw InvalidInput("region tensor rank must be in 1..6");
  if (static_cast<int>(entries_.size()) != pow3(rank)) {
    throw InvalidInput("region tensor of rank " + std::to_string(rank) + " needs " +
                       std::to_string(pow3(rank)) + " entries");
  }
  for (int e : entries_) {
    if (e < 0) throw InvalidInput("region tensor entries must be nonnegative");
  }
}

RegionTensor RegionTensor::matrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<int> entries;
  if (rows.size() != 3) throw InvalidInput("matrix needs 3 rows");
  for (const auto& row : rows) {
    if (row.size() != 3) throw InvalidInput("matrix rows need 3 entries");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return RegionTensor(2, std::move(entries));
}

int RegionTensor::flat_index(std::span<const int> regions) const {
  if (static_cast<int>(regions.size()) != rank_) throw InvalidInput("region tuple has wrong rank");
  int flat = 0;
  for (int r : regions) {
    if (r < 0 || r > 2) throw InvalidInput("region index out of range");
    flat = 3 * flat + r;
  }
  return flat;
}

std::vector<int> RegionTensor::regions_of(int flat) const {
  std::vector<int> regions(rank_);
  for (int k = rank_ - 1; k >= 0; --k) {
    regions[k] = flat % 3;
    flat /= 3;
  }
  return regions;
}

int RegionTensor::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int RegionTensor::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool FaceSums::all_positive() const {
  return std::all_of(sums.begin(), sums.end(), [](int s) { return s > 0; });
}

std::vector<int> faces_of_entry(const RegionTensor& t, int flat) {
  std::vector<int> out;
  auto regions = t.regions_of(flat);
  for (int k = 0; k < t.rank(); ++k) {
    if (regions[k] == kLow) out.push_back(2 * k);
    if (regions[k] == kHigh) out.push_back(2 * k + 1);
  }
  return out;
}

FaceSums face_sums(const RegionTensor& t) {
  FaceSums fs{std::vector<int>(2 * t.rank(), 0)};
  for (int i = 0; i < t.size(); ++i) {
    for (int face : faces_of_entry(t, i)) fs.sums[face] += t[i];
  }
  return fs;
}

RegionTensor alpha_project(const LatticeGraph& g, const VertexSet& selected) {
  if (selected.universe() != g.vertex_count()) throw InvalidInput("vertex set/graph mismatch");
  RegionTensor t(g.rank());
  std::vector<int> regions(g.rank());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (selected.contains(v)) continue;
    Coord c = g.coord_of(v);
    for (int k = 0; k < g.rank(); ++k) regions[k] = region_of(c[k], g.dim(k));
    ++t[t.flat_index(regions)];
  }
  return t;
}

RegionTensor starting_tensor(const LatticeGraph& g) {
  return alpha_project(g, VertexSet(g.vertex_count()));
}

RegionTensor starting_tensor(const std::vector<int>& dims) {
  // Closed form: the region count is the product of per-axis region sizes.
  RegionTensor t(static_cast<int>(dims.size()));
  LatticeGraph g(dims);
  for (int i = 0; i < t.size(); ++i) {
    int count = 1;
    auto regions = t.regions_of(i);
    for (int k = 0; k < t.rank(); ++k) count *= regions[k] == kMid ? g.dim(k) - 2 : 1;
    t[i] = count;
  }
  return t;
}

RegionTensor parse_matrix(std::string_view literal) {
  std::vector<int> entries;
  int rows = 0;
  std::string text(literal);
  std::stringstream row_stream(text);
  for (std::string row; std::getline(row_stream, row, ';');) {
    ++rows;
    int cols = 0;
    std::stringstream cell_stream(row);
    for (std::string cell; std::getline(cell_stream, cell, ',');) {
      std::string token = trim(cell);
      std::size_t used = 0;
      int value = -1;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (token.empty() || used != token.size() || value < 0) {
        throw InvalidInput("bad matrix entry '" + token + "'");
      }
      entries.push_back(value);
      ++cols;
    }
    if (cols != 3) throw InvalidInput("matrix rows need exactly 3 entries");
  }
  if (rows != 3) throw InvalidInput("matrix literal needs exactly 3 rows");
  return RegionTensor(2, std::move(entries));
}

RegionTensor parse_tensor_document(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad tensor document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("entries")) {
    throw InvalidInput("tensor document needs 'dims' and 'entries'");
  }
  try {
    auto dims = doc.at("dims").get<std::vector<int>>();
    for (int n : dims) {
      if (n != 3) throw InvalidInput("region tensors have extent 3 on every axis");
    }
    return RegionTensor(static_cast<int>(dims.size()), doc.at("entries").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad tensor document: ") + e.what());
  }
}

std::string format_tensor(const RegionTensor& t) {
  std::string out;
  for (int i = 0; i < t.size(); ++i) {
    if (i) out += (i % 3 == 0) ? ";" : ",";
    out += std::to_string(t[i]);
  }
  return out;
}

}  // namespace geodetic
