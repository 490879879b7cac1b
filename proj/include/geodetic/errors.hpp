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

#ifndef GEODETIC_ERRORS_HPP
#define GEODETIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geodetic {

// Malformed or out-of-range caller input (bad coordinates, bad spec strings).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search hit its configured position limit.
class CapacityExceeded : public std::runtime_error {
 public:
  CapacityExceeded(const std::string& what, std::size_t reached)
      : std::runtime_error(what), reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

// An operation was called outside its precondition, e.g. asking a
// terminal position for its moves.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A play revisited a position; gamegraphs must be acyclic.
class CycleDetected : public std::runtime_error {
 public:
  CycleDetected(const std::string& position)
      : std::runtime_error("cycle through position " + position),
        position_(position) {}
  const std::string& position() const { return position_; }

 private:
  std::string position_;
};

// A map between gamegraphs sent a position outside its target game.
class InvalidMap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geodetic

#endif  // GEODETIC_ERRORS_HPP
