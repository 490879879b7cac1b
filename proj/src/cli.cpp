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

#include "geodetic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "geodetic/claims.hpp"
#include "geodetic/errors.hpp"
#include "geodetic/explicit_gamegraph.hpp"
#include "geodetic/lattice.hpp"
#include "geodetic/region_tensor.hpp"
#include "geodetic/removal_game.hpp"
#include "geodetic/strategies.hpp"
#include "geodetic/tensor_game.hpp"

namespace geodetic {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::size_t state_limit = kDefaultPositionLimit;
  std::string game = "dnt";
  std::string grid;
  std::string matrix;
  std::string tensor_file;
  bool oracle = false;
  bool no_quotient = false;
  bool no_symmetry = false;
  bool via_matrix = false;
  std::string max;
  std::string format = "json";
  std::string fixture;
  int k = 3;
  int random_graphs = 0;
  std::uint64_t seed = 1;
  int max_positions = 12;
  std::vector<std::string> claims;
  std::string claims_file;
  bool all_claims = false;
  int max_entry = 2;
  int max_center = 4;
  std::string set;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  auto d = std::chrono::steady_clock::now() - since;
  return std::chrono::duration<double, std::milli>(d).count();
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

Json coords_json(const LatticeGraph& g, const VertexSet& s) {
  Json list = Json::array();
  for (const auto& c : coords_of(g, s)) list.push_back(c);
  return list;
}

std::vector<Coord> parse_vertex_list(std::string_view text) {
  std::vector<Coord> coords;
  std::stringstream items{std::string(text)};
  std::string item;
  while (std::getline(items, item, ';')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
               item.end());
    if (item.empty()) continue;
    if (item.size() < 2 || item.front() != '(' || item.back() != ')') {
      throw InvalidInput("vertices are written (i,j,...): '" + item + "'");
    }
    Coord c;
    std::stringstream parts(item.substr(1, item.size() - 2));
    std::string part;
    while (std::getline(parts, part, ',')) {
      try {
        std::size_t used = 0;
        c.push_back(std::stoi(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::logic_error&) {
        throw InvalidInput("bad coordinate '" + part + "'");
      }
    }
    coords.push_back(std::move(c));
  }
  return coords;
}

Json move_json(const MoveResponse& m, int rank) { return describe_move(m, rank); }

Json witness_json(const StrategyWitness& w) {
  Json play = Json::array();
  for (const auto& step : w.play) {
    play.push_back({{"player", step.by_strategy ? "strategy" : "adversary"},
                    {"move", move_json(step.move, w.start.board.rank())}});
  }
  return {{"start", format_tensor(w.start.board)}, {"heap", w.start.heap}, {"play", play},
          {"reason", w.reason}};
}

Json claim_report_json(const ClaimReport& r) {
  Json bounds = Json::object();
  for (const auto& b : r.claim.bounds) bounds[b.name] = {b.lo, b.hi};
  Json doc = {{"claim", r.claim.name},
              {"family", r.claim.family},
              {"strategy", to_string(r.strategy)},
              {"game", to_string(r.claim.kind)},
              {"attach_star", r.claim.attach_star},
              {"claimed_nim", r.claim.claimed_nim},
              {"bounds", bounds},
              {"members", r.members.size()},
              {"states_visited", r.states_visited},
              {"strategy_pass", r.strategy_pass},
              {"nim_agrees", r.nim_agrees},
              {"pass", r.pass()}};
  Json mismatches = Json::array();
  for (const auto& m : r.members) {
    if (m.computed_nim != r.claim.claimed_nim) {
      mismatches.push_back({{"start", format_tensor(m.start)}, {"nim", m.computed_nim}});
    }
  }
  doc["nim_mismatches"] = mismatches;
  doc["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
  return doc;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const GameKind kind = parse_game_kind(o.game);
  const int sources = !o.grid.empty() + !o.matrix.empty() + !o.tensor_file.empty();
  if (sources != 1) throw InvalidInput("give exactly one of --grid, --matrix, --tensor");
  const auto t0 = std::chrono::steady_clock::now();
  Json doc = {{"game", to_string(kind)}};
  Nim nim = 0;
  std::size_t explored = 0;

  std::optional<RegionTensor> tensor;
  if (!o.grid.empty()) {
    LatticeGraph g = LatticeGraph::parse(o.grid);
    doc["input"] = g.to_string();
    if (!RemovalGame(LatticeGraph(g.dims()), kind).canonical_dims()) {
      err << "warning: " << g.to_string() << " has no dimension >= 3\n";
    }
    if (o.via_matrix) {
      tensor = starting_tensor(g);
    } else {
      SolveResult r = o.oracle ? solve_naive(g, kind, o.state_limit)
                               : solve(g, kind, !o.no_quotient, o.state_limit);
      nim = r.nim;
      explored = r.positions_explored;
    }
  } else {
    tensor = o.matrix.empty() ? parse_tensor_document(read_file(o.tensor_file))
                              : parse_matrix(o.matrix);
    doc["input"] = format_tensor(*tensor);
  }
  if (tensor) {
    if (o.oracle) {
      if (kind == GameKind::Dnt && !face_sums(*tensor).all_positive()) {
        throw InvalidInput("DNT tensor positions need every face sum positive");
      }
      TensorGame game(*tensor, kind);
      auto gg = game.gamegraph(false);
      nim = naive_nim(gg, gg.start, o.state_limit, &explored);
    } else {
      TensorSolveResult r = tensor_nim(*tensor, kind, !o.no_symmetry, o.state_limit);
      nim = r.nim;
      explored = r.positions_explored;
    }
  }
  doc["nim"] = nim;
  doc["outcome"] = to_string(nim == 0 ? Outcome::SecondWins : Outcome::FirstWins);
  doc["positions_explored"] = explored;
  doc["elapsed_ms"] = elapsed_ms(t0);
  emit(out, doc);
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const GameKind kind = parse_game_kind(o.game);
  LatticeGraph bound = LatticeGraph::parse(o.max);
  if (bound.rank() != 2) throw InvalidInput("--max takes a grid MxN");
  const int max_m = std::min(bound.dim(0), bound.dim(1));
  const int max_n = std::max(bound.dim(0), bound.dim(1));
  if (max_n < 3) throw InvalidInput("empty range: grids need a side of at least 3");
  if (o.format != "json" && o.format != "tsv") throw InvalidInput("--format is json or tsv");

  Json rows = Json::array();
  bool all_agree = true;
  for (int m = 2; m <= max_m; ++m) {
    for (int n = std::max(m, 3); n <= max_n; ++n) {
      LatticeGraph g({m, n});
      const Nim pty = parity(static_cast<long long>(m) * n);
      Json graph_nim = nullptr;
      if (g.vertex_count() <= 64) {
        try {
          graph_nim = solve(g, kind, true, o.state_limit).nim;
        } catch (const CapacityExceeded&) {
        }
      }
      const Nim matrix_nim = tensor_nim(starting_tensor(g), kind, true, o.state_limit).nim;
      bool agree = matrix_nim == pty && (graph_nim.is_null() || graph_nim.get<Nim>() == pty);
      all_agree = all_agree && agree;
      rows.push_back({{"m", m}, {"n", n}, {"nim_graph", graph_nim}, {"nim_matrix", matrix_nim},
                      {"parity", pty}, {"agree", agree}});
    }
  }
  if (o.format == "tsv") {
    out << "m\tn\tnim_graph\tnim_matrix\tparity\tagree\n";
    for (const auto& r : rows) {
      out << r["m"] << '\t' << r["n"] << '\t' << (r["nim_graph"].is_null() ? "-" : r["nim_graph"].dump())
          << '\t' << r["nim_matrix"] << '\t' << r["parity"] << '\t' << r["agree"] << '\n';
    }
  } else {
    emit(out, {{"game", to_string(kind)}, {"max", o.max}, {"rows", rows}, {"all_agree", all_agree}});
  }
  return kExitOk;
}

template <class P, class Q, class DescribeP, class DescribeQ>
Json map_report_json(const OptionPreservingReport<P, Q>& r, DescribeP dp, DescribeQ dq) {
  Json doc = {{"pass", r.pass}, {"positions_checked", r.positions_checked}};
  if (!r.witness) {
    doc["witness"] = nullptr;
    return doc;
  }
  const auto& w = *r.witness;
  Json missing = Json::array(), extra = Json::array();
  for (const auto& q : w.missing) missing.push_back(dq(q));
  for (const auto& q : w.extra) extra.push_back(dq(q));
  doc["witness"] = {{"source", dp(w.source)}, {"image", dq(w.image)}, {"missing", missing},
                    {"extra", extra},
                    {"nim_mismatch", w.nim_mismatch ? Json{w.nim_mismatch->first, w.nim_mismatch->second}
                                                    : Json(nullptr)}};
  return doc;
}

int finish(std::ostream& out, const Json& doc, bool pass) {
  emit(out, doc);
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_alpha(const Options& o, std::ostream& out) {
  const GameKind kind = parse_game_kind(o.game);
  LatticeGraph g = LatticeGraph::parse(o.grid);
  RemovalGame game(g, kind);
  TensorGame tensor(starting_tensor(g), kind);
  auto report = verify_option_preserving<Selection, TensorGame::Code>(
      game.gamegraph(), tensor.gamegraph(false),
      [&](const Selection& s) { return tensor.encode(alpha_project(g, game.to_vertex_set(s))); });
  Json doc = {{"target", "alpha"}, {"game", to_string(kind)}, {"grid", g.to_string()}};
  doc.update(map_report_json(
      report, [&](Selection s) { return coords_json(g, game.to_vertex_set(s)); },
      [&](TensorGame::Code c) { return format_tensor(tensor.decode(c)); }));
  return finish(out, doc, report.pass);
}

int cmd_verify_quotient(const Options& o, std::ostream& out) {
  const GameKind kind = parse_game_kind(o.game);
  LatticeGraph g = LatticeGraph::parse(o.grid);
  RemovalGame game(g, kind);
  auto report = verify_option_preserving<Selection, Selection>(
      game.gamegraph(), game.quotient_gamegraph(),
      [&](const Selection& s) { return game.canonical_form(s); });
  auto describe = [&](Selection s) { return coords_json(g, game.to_vertex_set(s)); };
  Json doc = {{"target", "quotient"}, {"game", to_string(kind)}, {"grid", g.to_string()},
              {"symmetries", game.symmetry_order()}};
  doc.update(map_report_json(report, describe, describe));
  return finish(out, doc, report.pass);
}

int cmd_verify_delay(const Options& o, std::ostream& out) {
  if (o.k < 0) throw InvalidInput("--k must be nonnegative");
  if (o.fixture.empty() == (o.random_graphs == 0)) {
    throw InvalidInput("give exactly one of --fixture and --random");
  }
  std::vector<std::pair<std::string, ExplicitGamegraph>> graphs;
  if (!o.fixture.empty()) {
    bool named = o.fixture == "fig5" || o.fixture == "fig6";
    graphs.emplace_back(o.fixture, named ? gamegraph_fixture(o.fixture)
                                         : parse_gamegraph(read_file(o.fixture)));
  } else {
    if (o.random_graphs < 0 || o.max_positions < 1) throw InvalidInput("bad random graph bounds");
    for (int i = 0; i < o.random_graphs; ++i) {
      graphs.emplace_back("random " + std::to_string(o.seed + i),
                          random_gamegraph(o.seed + i, o.max_positions));
    }
  }
  Json doc = {{"target", "delay"}, {"k", o.k}};
  std::size_t positions = 0;
  Json violation = nullptr;
  for (const auto& [name, explicit_graph] : graphs) {
    auto g = explicit_graph.as_gamegraph();
    auto report = verify_delay_identities(g, o.k);
    positions += report.positions_checked;
    if (!report.pass && violation.is_null()) {
      const auto& v = report.violations.front();
      violation = {{"graph", name}, {"position", v.position}, {"delay", v.delay},
                   {"expected", v.expected}, {"actual", v.actual}};
    }
    if (graphs.size() == 1) {
      doc["nim"] = nim_of(g);
      doc["sum_nim"] = nim_of(disjunctive_sum(g, path_game(o.k)));
      doc["delayed_nim"] = nim_of(delayed_product(g, o.k));
    }
  }
  doc["graphs_checked"] = graphs.size();
  doc["positions_checked"] = positions;
  doc["pass"] = violation.is_null();
  doc["violation"] = violation;
  return finish(out, doc, violation.is_null());
}

int cmd_verify_strategy(const Options& o, std::ostream& out) {
  std::vector<StrategyClaim> claims;
  if (o.all_claims) {
    for (const auto& name : builtin_claim_names()) claims.push_back(builtin_claim(name));
  }
  for (const auto& name : o.claims) claims.push_back(builtin_claim(name));
  if (!o.claims_file.empty()) {
    for (auto& c : parse_claims_document(read_file(o.claims_file))) claims.push_back(std::move(c));
  }
  if (claims.empty()) throw InvalidInput("give --claim, --claims-file or --all");
  Json reports = Json::array();
  bool pass = true;
  for (const auto& claim : claims) {
    ClaimReport r = verify_claim(claim, o.state_limit);
    pass = pass && r.pass();
    reports.push_back(claim_report_json(r));
  }
  return finish(out, {{"target", "strategy"}, {"pass", pass}, {"claims", reports}}, pass);
}

int cmd_verify_middle(const Options& o, std::ostream& out) {
  const GameKind kind = parse_game_kind(o.game);
  auto r = verify_center_reductions(kind, o.max_entry, o.max_center);
  Json doc = {{"target", "middle"}, {"game", to_string(kind)}, {"max_entry", o.max_entry},
              {"max_center", o.max_center}, {"matrices_checked", r.matrices_checked},
              {"pass", r.pass}};
  doc["counterexample"] = r.counterexample
                              ? Json{{"matrix", format_tensor(*r.counterexample)},
                                     {"expected", r.expected}, {"actual", r.actual}}
                              : Json(nullptr);
  return finish(out, doc, r.pass);
}

int cmd_hull(const Options& o, std::ostream& out) {
  LatticeGraph g = LatticeGraph::parse(o.grid);
  auto coords = parse_vertex_list(o.set);
  VertexSet s = make_vertex_set(g, coords);
  VertexSet hull = convex_hull(g, s);
  emit(out, {{"grid", g.to_string()}, {"set", coords_json(g, s)}, {"hull", coords_json(g, hull)},
             {"full", hull_is_full(g, s)}});
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for the geodetic removing games TER and DNT on grids and lattices",
               "geodetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--state-limit", o.state_limit, "Position limit for searches")
      ->envname("GEODETIC_STATE_LIMIT")
      ->check(CLI::PositiveNumber);

  auto game_option = [&](CLI::App* cmd) {
    cmd->add_option("--game", o.game, "ter or dnt")->capture_default_str();
  };

  auto* solve_cmd = app.add_subcommand("solve", "Nim value of a game");
  game_option(solve_cmd);
  solve_cmd->add_option("--grid", o.grid, "Lattice such as 3x4 or 2x2x3");
  solve_cmd->add_option("--matrix", o.matrix, "Matrix literal a,b,c;d,e,f;g,h,i");
  solve_cmd->add_option("--tensor", o.tensor_file, "JSON file with dims and entries");
  solve_cmd->add_flag("--oracle", o.oracle, "Plain recursion without memo or symmetry");
  solve_cmd->add_flag("--no-quotient", o.no_quotient, "Search the raw graph game");
  solve_cmd->add_flag("--no-symmetry", o.no_symmetry, "Search the raw tensor game");
  solve_cmd->add_flag("--via-matrix", o.via_matrix, "Solve a lattice through its tensor game");

  auto* table_cmd = app.add_subcommand("table", "Nim values of all grids up to a bound");
  game_option(table_cmd);
  table_cmd->add_option("--max", o.max, "Largest grid MxN")->required();
  table_cmd->add_option("--format", o.format, "json or tsv")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Check maps, identities and strategies");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();
  auto* alpha_cmd = verify_cmd->add_subcommand("alpha", "Region projection preserves options");
  game_option(alpha_cmd);
  alpha_cmd->add_option("--grid", o.grid)->required();
  auto* quotient_cmd = verify_cmd->add_subcommand("quotient", "Symmetry quotient preserves options");
  game_option(quotient_cmd);
  quotient_cmd->add_option("--grid", o.grid)->required();
  auto* delay_cmd = verify_cmd->add_subcommand("delay", "Delay identities of a gamegraph");
  delay_cmd->add_option("--fixture", o.fixture, "fig5, fig6 or a gamegraph file");
  delay_cmd->add_option("--k", o.k, "Delay length")->capture_default_str();
  delay_cmd->add_option("--random", o.random_graphs, "Number of random gamegraphs");
  delay_cmd->add_option("--seed", o.seed, "First random seed")->capture_default_str();
  delay_cmd->add_option("--max-positions", o.max_positions)->capture_default_str();
  auto* strategy_cmd = verify_cmd->add_subcommand("strategy", "Exhaustive strategy check");
  strategy_cmd->add_option("--claim", o.claims, "Built-in claim name");
  strategy_cmd->add_option("--claims-file", o.claims_file, "JSON claims document");
  strategy_cmd->add_flag("--all", o.all_claims, "Every built-in claim");
  auto* middle_cmd = verify_cmd->add_subcommand("middle", "Center entry reductions");
  game_option(middle_cmd);
  middle_cmd->add_option("--max-entry", o.max_entry)->capture_default_str();
  middle_cmd->add_option("--max-center", o.max_center)->capture_default_str();

  auto* hull_cmd = app.add_subcommand("hull", "Convex hull of a vertex set");
  hull_cmd->add_option("--grid", o.grid)->required();
  hull_cmd->add_option("--set", o.set, "Vertices (i,j);(k,l);...")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, out, err);
    if (*table_cmd) return cmd_table(o, out);
    if (*alpha_cmd) return cmd_verify_alpha(o, out);
    if (*quotient_cmd) return cmd_verify_quotient(o, out);
    if (*delay_cmd) return cmd_verify_delay(o, out);
    if (*strategy_cmd) return cmd_verify_strategy(o, out);
    if (*middle_cmd) return cmd_verify_middle(o, out);
    if (*hull_cmd) return cmd_hull(o, out);
  } catch (const CapacityExceeded& e) {
    emit(out, {{"error", "capacity"}, {"message", e.what()}, {"reached", e.reached()}});
    return kExitCapacity;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const CycleDetected& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  err << "error: unknown command\n";
  return kExitInvalidInput;
}

}  // namespace geodetic
