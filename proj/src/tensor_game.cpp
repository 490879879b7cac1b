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

#include "geodetic/tensor_game.hpp"

#include <algorithm>
#include <bit>

#include "geodetic/errors.hpp"

namespace geodetic {

TensorGame::TensorGame(const RegionTensor& start, GameKind kind)
    : kind_(kind), rank_(start.rank()), entries_(start.size()) {
  width_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(start.max_entry()))));
  if (entries_ * width_ > 64) {
    throw CapacityExceeded("tensor state needs " + std::to_string(entries_ * width_) +
                               " bits; at most 64 are supported",
                           0);
  }
  field_mask_ = (Code{1} << width_) - 1;
  faces_of_entry_.resize(entries_);
  face_masks_.assign(2 * rank_, 0);
  for (int i = 0; i < entries_; ++i) {
    faces_of_entry_[i] = faces_of_entry(start, i);
    for (int face : faces_of_entry_[i]) face_masks_[face] |= field_mask_ << (i * width_);
  }
  for (const auto& perm : box_automorphisms(std::vector<int>(rank_, 3))) {
    symmetries_.emplace_back(perm, width_);
  }
  start_ = encode(start);
}

TensorGame::Code TensorGame::encode(const RegionTensor& t) const {
  if (t.rank() != rank_) throw InvalidInput("tensor rank does not match the game");
  Code code = 0;
  for (int i = 0; i < entries_; ++i) {
    if (static_cast<Code>(t[i]) > field_mask_) throw InvalidInput("tensor entry exceeds field width");
    code |= static_cast<Code>(t[i]) << (i * width_);
  }
  return code;
}

RegionTensor TensorGame::decode(Code code) const {
  RegionTensor t(rank_);
  for (int i = 0; i < entries_; ++i) t[i] = entry(code, i);
  return t;
}

bool TensorGame::is_live(Code code) const {
  // A face sum is positive iff some entry on the face is nonzero.
  for (Code face : face_masks_) {
    if (!(code & face)) return false;
  }
  return true;
}

std::vector<TensorGame::Code> TensorGame::options(Code code) const {
  std::vector<Code> out;
  if (!is_live(code)) return out;
  for (int i = 0; i < entries_; ++i) {
    if (!entry(code, i)) continue;
    const Code next = code - (Code{1} << (i * width_));
    if (kind_ == GameKind::Dnt) {
      bool keeps = true;
      for (int face : faces_of_entry_[i]) keeps = keeps && (next & face_masks_[face]);
      if (!keeps) continue;
    }
    out.push_back(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TensorGame::Code TensorGame::canonical_form(Code code) const {
  Code best = code;
  for (const auto& sym : symmetries_) best = std::min(best, sym(code));
  return best;
}

Gamegraph<TensorGame::Code> TensorGame::gamegraph(bool use_symmetry) const {
  if (!use_symmetry) {
    return {start_, [game = *this](const Code& c) { return game.options(c); }};
  }
  return {canonical_form(start_), [game = *this](const Code& c) {
            auto opts = game.options(c);
            for (auto& q : opts) q = game.canonical_form(q);
            return normalize_options(std::move(opts));
          }};
}

std::vector<RegionTensor> tensor_options(const RegionTensor& t, GameKind kind) {
  if (!face_sums(t).all_positive()) {
    throw ContractViolation("options requested for a tensor with a zero face sum");
  }
  TensorGame game(t, kind);
  std::vector<RegionTensor> out;
  for (auto code : game.options(game.start())) out.push_back(game.decode(code));
  std::sort(out.begin(), out.end());
  return out;
}

TensorSolveResult tensor_nim(const RegionTensor& t, GameKind kind, bool use_symmetry,
                             std::size_t position_limit) {
  if (kind == GameKind::Dnt && !face_sums(t).all_positive()) {
    throw InvalidInput("DNT tensor positions need every face sum positive");
  }
  TensorGame game(t, kind);
  NimSolver<TensorGame::Code> solver(game.gamegraph(use_symmetry), position_limit);
  TensorSolveResult result;
  result.nim = solver.nim();
  result.positions_explored = solver.positions_explored();
  return result;
}

std::pair<RegionTensor, Nim> reduce_center_dnt(const RegionTensor& t) {
  RegionTensor reduced = t;
  reduced[t.center_index()] = 0;
  return {reduced, parity(t.center())};
}

RegionTensor reduce_center_ter(const RegionTensor& t) {
  RegionTensor reduced = t;
  reduced[t.center_index()] = static_cast<int>(parity(t.center()));
  return reduced;
}

Gamegraph<std::pair<TensorGame::Code, int>> ter_center_delay_game(const RegionTensor& t) {
  RegionTensor without_center = t;
  without_center[t.center_index()] = 0;
  return delayed_product(TensorGame(without_center, GameKind::Ter).gamegraph(false), t.center());
}

CenterReductionReport verify_center_reductions(GameKind kind, int max_off_center, int max_center) {
  if (max_off_center < 0 || max_center < 0) throw InvalidInput("entry bounds must be nonnegative");
  RegionTensor top(2, std::vector<int>(9, max_off_center));
  top[top.center_index()] = max_center;
  RegionTensor top_flat = top;
  top_flat[top.center_index()] = 0;

  // Every matrix in range is a position of the game started from the
  // largest one, so one memo table serves them all.
  const TensorGame full(top, kind);
  NimSolver<TensorGame::Code> direct(full.gamegraph(false));
  const TensorGame flat(top_flat, GameKind::Ter);
  NimSolver<std::pair<TensorGame::Code, int>> delayed(delayed_product(flat.gamegraph(false), max_center));

  CenterReductionReport report;
  auto fail = [&](const RegionTensor& m, Nim expected, Nim actual) {
    report.pass = false;
    report.counterexample = m;
    report.expected = expected;
    report.actual = actual;
  };
  std::vector<int> off(8, 0);
  while (report.pass) {
    RegionTensor m(2);
    for (int i = 0, k = 0; i < 9; ++i) {
      if (i != m.center_index()) m[i] = off[k++];
    }
    if (kind == GameKind::Ter || face_sums(m).all_positive()) {
      const Nim flat_nim = direct.nim(full.encode(m));
      for (int c = 0; c <= max_center && report.pass; ++c) {
        m[m.center_index()] = c;
        const Nim actual = direct.nim(full.encode(m));
        ++report.matrices_checked;
        if (kind == GameKind::Dnt) {
          if (actual != (flat_nim ^ parity(c))) fail(m, flat_nim ^ parity(c), actual);
          continue;
        }
        RegionTensor n = m;
        n[n.center_index()] = 0;
        const Nim via_delay = delayed.nim({flat.encode(n), c});
        const Nim via_parity = direct.nim(full.encode(reduce_center_ter(m)));
        if (actual != via_delay) fail(m, via_delay, actual);
        if (report.pass && actual != via_parity) fail(m, via_parity, actual);
      }
    }
    int k = 0;
    while (k < 8 && off[k] == max_off_center) off[k++] = 0;
    if (k == 8) break;
    ++off[k];
  }
  return report;
}

}  // namespace geodetic
