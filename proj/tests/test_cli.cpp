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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "geodetic/cli.hpp"
#include "json.hpp"

using namespace geodetic;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(GEODETIC_FIXTURE_DIR) + "/" + name; }

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Timing is the only field allowed to differ between runs.
Json without_timing(Json doc) {
  doc.erase("elapsed_ms");
  return doc;
}

struct ScopedEnv {
  explicit ScopedEnv(const char* value) { setenv("GEODETIC_STATE_LIMIT", value, 1); }
  ~ScopedEnv() { unsetenv("GEODETIC_STATE_LIMIT"); }
};

}  // namespace

TEST_CASE("solve") {
  Run grid = run({"solve", "--game", "dnt", "--grid", "3x4"});
  CHECK(grid.code == kExitOk);
  CHECK(grid.doc()["nim"] == 0);
  CHECK(grid.doc()["outcome"] == "second");

  Run matrix = run({"solve", "--game", "ter", "--matrix", "1,1,1;1,1,1;1,1,1"});
  CHECK(matrix.code == kExitOk);
  CHECK(matrix.doc()["nim"] == 1);
  CHECK(matrix.doc()["outcome"] == "first");

  Run oracle = run({"solve", "--game", "ter", "--grid", "2x3", "--oracle"});
  CHECK(oracle.doc()["nim"] == 0);
  CHECK(run({"solve", "--game", "ter", "--grid", "3x3", "--no-quotient"}).doc()["nim"] == 1);
  CHECK(run({"solve", "--game", "ter", "--grid", "3x5", "--via-matrix"}).doc()["nim"] == 1);
  CHECK(run({"solve", "--game", "dnt", "--matrix", "1,1,1;0,3,0;1,1,1", "--oracle"}).doc()["nim"] == 1);
  CHECK(run({"solve", "--game", "dnt", "--tensor", fixture("cube_2x2x3.json")}).doc()["nim"] == 0);

  Run warned = run({"solve", "--game", "dnt", "--grid", "2x2"});
  CHECK(warned.code == kExitOk);
  CHECK(warned.err.find("warning") != std::string::npos);
}

TEST_CASE("solve output is stable") {
  Run a = run({"solve", "--game", "dnt", "--grid", "3x4"});
  Run b = run({"solve", "--game", "dnt", "--grid", "3x4"});
  CHECK(without_timing(a.doc()) == without_timing(b.doc()));
  CHECK(without_timing(a.doc()).dump(2) + "\n" == read(fixture("golden/solve_dnt_3x4.json")));
  std::vector<std::string> keys;
  const Json doc = a.doc();
  for (const auto& [key, value] : doc.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"game", "input", "nim", "outcome", "positions_explored",
                                         "elapsed_ms"});
}

TEST_CASE("table") {
  Run dnt = run({"table", "--game", "dnt", "--max", "4x5"});
  CHECK(dnt.code == kExitOk);
  CHECK(dnt.doc()["all_agree"] == true);
  CHECK(dnt.doc()["rows"].size() == 8);
  Run tsv = run({"table", "--game", "ter", "--max", "3x4", "--format", "tsv"});
  CHECK(tsv.code == kExitOk);
  CHECK(tsv.out == read(fixture("golden/table_ter_3x4.tsv")));
  CHECK(run({"table", "--game", "ter", "--max", "2x2"}).code == kExitInvalidInput);
  CHECK(run({"table", "--game", "ter", "--max", "3x4", "--format", "xml"}).code == kExitInvalidInput);
}

TEST_CASE("hull") {
  Run full = run({"hull", "--grid", "5x3", "--set", "(0,2);(2,0);(4,1)"});
  CHECK(full.code == kExitOk);
  CHECK(full.doc()["full"] == true);
  CHECK(full.doc()["hull"].size() == 15);
  Run single = run({"hull", "--grid", "3x5", "--set", "(1,1)"});
  CHECK(single.doc()["full"] == false);
  CHECK(single.doc()["hull"] == Json::parse("[[1,1]]"));
  Run cube = run({"hull", "--grid", "2x2x3", "--set", "(0,0,0);(1,1,2)"});
  CHECK(cube.out == read(fixture("golden/hull_2x2x3.json")));
  CHECK(run({"hull", "--grid", "3x5", "--set", "(4,1)"}).code == kExitInvalidInput);
  CHECK(run({"hull", "--grid", "3x5", "--set", "(1,1,1)"}).code == kExitInvalidInput);
  CHECK(run({"hull", "--grid", "3x5", "--set", "1,1"}).code == kExitInvalidInput);
  CHECK(run({"hull", "--grid", "3x5", "--set", ""}).code == kExitInvalidInput);
}

TEST_CASE("verify") {
  Run alpha = run({"verify", "alpha", "--grid", "2x3", "--game", "dnt"});
  CHECK(alpha.code == kExitOk);
  CHECK(alpha.doc()["pass"] == true);
  CHECK(run({"verify", "quotient", "--grid", "3x3", "--game", "ter"}).code == kExitOk);

  Run delay = run({"verify", "delay", "--fixture", "fig5", "--k", "3"});
  CHECK(delay.code == kExitOk);
  CHECK(delay.out == read(fixture("golden/verify_delay_fig5.json")));
  CHECK(run({"verify", "delay", "--fixture", fixture("fig6.gg"), "--k", "2"}).doc()["nim"] == 0);
  Run random = run({"verify", "delay", "--random", "20", "--seed", "4", "--k", "4"});
  CHECK(random.code == kExitOk);
  CHECK(random.doc()["graphs_checked"] == 20);
  CHECK(run({"verify", "delay", "--fixture", fixture("cycle.gg")}).code == kExitInvalidInput);

  Run middle = run({"verify", "middle", "--game", "ter", "--max-entry", "1", "--max-center", "2"});
  CHECK(middle.code == kExitOk);
  CHECK(middle.doc()["matrices_checked"] == 256 * 3);

  Run strategy = run({"verify", "strategy", "--claim", "ma", "--claim", "opening"});
  CHECK(strategy.code == kExitOk);
  CHECK(strategy.doc()["claims"].size() == 2);
}

TEST_CASE("verification failures exit with 4") {
  Run necessity = run({"verify", "strategy", "--claim", "hr-necessity"});
  CHECK(necessity.code == kExitVerificationFailed);
  const Json doc = necessity.doc();
  const Json& witness = doc["claims"][0]["witness"];
  CHECK(witness["play"].size() > 0);
  CHECK(witness["reason"] == "the adversary made the last move");

  Run wrong = run({"verify", "strategy", "--claims-file", fixture("wrong_nim_claim.json")});
  CHECK(wrong.code == kExitVerificationFailed);
  CHECK(wrong.doc()["claims"][0]["strategy_pass"] == true);
  CHECK(wrong.doc()["claims"][0]["nim_agrees"] == false);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({"solve", "--game", "dnt", "--grid", "1x5"}).code == kExitInvalidInput);
  CHECK(run({"solve", "--game", "chess", "--grid", "3x3"}).code == kExitInvalidInput);
  CHECK(run({"solve", "--game", "ter", "--matrix", "1,1;1,1"}).code == kExitInvalidInput);
  CHECK(run({"solve", "--game", "dnt", "--matrix", "0,0,0;1,1,1;1,1,1"}).code == kExitInvalidInput);
  CHECK(run({"solve", "--game", "ter", "--grid", "3x3", "--matrix", "1,1,1;1,1,1;1,1,1"}).code ==
        kExitInvalidInput);
  CHECK(run({"solve", "--game", "ter"}).code == kExitInvalidInput);
  CHECK(run({"solve", "--game", "ter", "--tensor", "/nonexistent.json"}).code == kExitInvalidInput);
  CHECK(run({"frobnicate"}).code == kExitInvalidInput);
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"verify"}).code == kExitInvalidInput);
  CHECK(run({"verify", "strategy"}).code == kExitInvalidInput);
  CHECK(run({"verify", "strategy", "--claim", "nope"}).code == kExitInvalidInput);
  CHECK(run({"verify", "delay", "--fixture", "fig9"}).code == kExitInvalidInput);
  CHECK(run({"solve", "--state-limit", "0", "--grid", "3x3"}).code == kExitInvalidInput);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("capacity exits with 3") {
  Run small = run({"solve", "--game", "ter", "--grid", "3x3", "--state-limit", "10"});
  CHECK(small.code == kExitCapacity);
  CHECK(small.doc()["error"] == "capacity");
  CHECK(run({"solve", "--game", "ter", "--grid", "5x13"}).code == kExitCapacity);
  CHECK(run({"solve", "--game", "ter", "--grid", "3x3", "--oracle", "--state-limit", "50"}).code ==
        kExitCapacity);
  CHECK(run({"verify", "strategy", "--claim", "hr", "--state-limit", "10"}).code == kExitCapacity);
}

TEST_CASE("state limit from the environment") {
  ScopedEnv env("10");
  CHECK(run({"solve", "--game", "ter", "--grid", "3x3"}).code == kExitCapacity);
  CHECK(run({"solve", "--game", "ter", "--grid", "3x3", "--state-limit", "100000"}).code == kExitOk);
}
