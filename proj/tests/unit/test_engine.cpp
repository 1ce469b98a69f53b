#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "eso/engine.hpp"
#include "eso/error.hpp"
#include "eso/gadgets.hpp"
#include "eso/oracles.hpp"
#include "eso/sweeps.hpp"
#include "support/brute.hpp"

using namespace eso;

namespace {

const Formula& lib(const std::string& name) { return formula_library().at(name).formula; }

Structure k4_minus_edge() { return graph_structure(brute::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})); }

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "eso_cli");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream captured, errors;
  auto* old_out = std::cout.rdbuf(captured.rdbuf());
  auto* old_err = std::cerr.rdbuf(errors.rdbuf());
  const int code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, captured.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("eso_unit_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("dispatch examples") {
  const Structure p3 = graph_structure(brute::from_edges(3, {{0, 1}, {1, 2}}));
  Decision vc = solve_dispatch(lib("vertex-cover"), p3, 1);
  CHECK(vc.answer);
  CHECK(vc.route == Route::CspBasic);  // priority puts the CSP kernel first on basic graphs
  Decision forced = solve_dispatch(lib("vertex-cover"), p3, 1, Route::SearchTree);
  CHECK(forced.answer);
  CHECK(forced.route == Route::SearchTree);

  const Formula literal = parse_formula("exists>= C . forall x . forall y . ((C(x) & C(y)) -> adj(x,y))");
  Decision lit = solve_dispatch(literal, k4_minus_edge(), 3);
  CHECK_FALSE(lit.answer);
  CHECK(lit.route == Route::OracleOnly);
  CHECK(solve_dispatch(lib("clique"), k4_minus_edge(), 3).answer);
  CHECK_FALSE(solve_dispatch(lib("clique"), k4_minus_edge(), 4).answer);

  Decision ds = solve_dispatch(lib("dominating-set"), graph_structure(brute::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})), 1);
  CHECK(ds.answer);
  CHECK(ds.route == Route::OracleOnly);
  CHECK(ds.label.hardness == Hardness::W2);
}

TEST_CASE("dispatch errors") {
  const Structure p3 = graph_structure(brute::from_edges(3, {{0, 1}, {1, 2}}));
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  CHECK(kind_of([&] { solve_dispatch(lib("vertex-cover"), p3, -1); }) == static_cast<int>(ErrorKind::Invalid));
  CHECK(kind_of([&] { solve_dispatch(lib("dominating-set"), p3, 1, Route::SearchTree); }) ==
        static_cast<int>(ErrorKind::Unsupported));
  Structure loop = load_structure("graph undirected 2\nedge 0 0\nedge 0 1\n");
  CHECK(kind_of([&] { solve_dispatch(lib("clique"), loop, 1, std::nullopt, StructureClass::Basic); }) ==
        static_cast<int>(ErrorKind::Unsupported));
  Structure other;
  other.universe_size = 2;
  other.signature = {{"e", 2}};
  other.relations["e"] = {};
  CHECK(kind_of([&] { solve_dispatch(lib("clique"), other, 1); }) == static_cast<int>(ErrorKind::Invalid));
}

TEST_CASE("every route agrees with the oracle on the library") {
  for (const auto& [name, entry] : formula_library())
    for (int n = 0; n <= 5; ++n)
      for (const Graph& g : graphs_up_to_isomorphism(n)) {
        const Structure s = graph_structure(g);
        for (int k = 0; k <= 3; ++k) {
          const bool expect = oracle_models(entry.formula, s, k);
          for (Route r : {Route::OneWsat, Route::SearchTree, Route::SaturationBasic, Route::CspBasic, Route::OracleOnly}) {
            const std::string route = to_string(r);
            CAPTURE(name);
            CAPTURE(route);
            int got = -1;
            try {
              got = solve_dispatch(entry.formula, s, k, r).answer;
            } catch (const Error& e) {
              CHECK(e.kind() == ErrorKind::Unsupported);
              continue;
            }
            CHECK(got == static_cast<int>(expect));
          }
        }
      }
}

TEST_CASE("arbitrary structures use the oracle or grounding routes") {
  Structure s = load_structure("structure\nuniverse 3\nrelation adj 2\n0 1\n1 2\n2 2\nend\n");
  CHECK(detect_class(s) == StructureClass::Arbitrary);
  Decision d = solve_dispatch(lib("reach-aa"), s, 2);
  CHECK(d.route == Route::SearchTree);
  CHECK(d.answer == oracle_models(lib("reach-aa"), s, 2));
  Structure two;
  two.universe_size = 2;
  two.signature = {{"adj", 2}, {"red", 1}};
  two.relations = {{"adj", {{0, 1}}}, {"red", {{0}}}};
  CHECK(detect_class(two) == StructureClass::Arbitrary);
  const Formula f = parse_formula("exists= C . forall x . (C(x) -> red(x))");
  CHECK(solve_dispatch(f, two, 1).answer);
  CHECK_FALSE(solve_dispatch(f, two, 2).answer);
}

TEST_CASE("CLI classify") {
  auto r = cli({"classify", "--mode", "ge", "--pattern", "ae", "--class", "basic"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("InParaAC0\n", 0) == 0);
  CHECK(cli({"classify", "--mode", "zz", "--pattern", "ae"}).code == 3);
}

TEST_CASE("CLI solve, oracle and errors") {
  const auto vc = temp_file("vc.eso", "exists<= C . forall x . forall y . (adj(x,y) -> (C(x) | C(y)))\n");
  const auto p3 = temp_file("p3.g", "graph basic 3\nedge 0 1\nedge 1 2\n");
  auto r = cli({"solve", "--formula", vc, "--structure", p3, "--k", "1", "--route", "SearchTree"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("YES (route=SearchTree)", 0) == 0);
  r = cli({"solve", "--formula", vc, "--structure", p3, "--k", "0", "--json", "--trace"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["answer"] == false);
  CHECK(j["route"] == "CspBasic");
  CHECK(j.contains("stats"));
  CHECK(cli({"oracle", "--library", "clique", "--structure", p3, "--k", "2"}).out.rfind("YES (route=OracleOnly)", 0) == 0);

  const auto bad = temp_file("bad.eso", "exists<= C . forall x (\n");
  CHECK(cli({"solve", "--formula", bad, "--structure", p3, "--k", "1"}).code == 3);
  const auto loop = temp_file("loop.g", "graph undirected 2\nedge 0 0\nedge 0 1\n");
  CHECK(cli({"solve", "--library", "clique", "--structure", loop, "--k", "1", "--class", "basic"}).code == 4);
  CHECK(cli({"solve", "--library", "dominating-set", "--structure", p3, "--k", "1", "--route", "CspBasic"}).code == 4);
  const auto big = temp_file("big.g", "graph basic 30\n");
  CHECK(cli({"oracle", "--library", "clique", "--structure", big, "--k", "2"}).code == 5);
}

TEST_CASE("CLI gen and reduce") {
  auto g = cli({"gen", "--kind", "mreach", "--width", "3", "--layers", "3", "--seed", "4", "--target", "no"});
  CHECK(g.code == 0);
  const auto m = parse_mreach(g.out);
  CHECK_FALSE(m.reachable());
  const auto path = temp_file("m.txt", g.out);
  auto r = cli({"reduce", "--kind", "aaa", "--input", path});
  CHECK(r.code == 0);
  const Structure s = load_structure(r.out);
  CHECK(s.universe_size == reduce_reach_aaa(m).graph.size());
  auto rg = cli({"gen", "--kind", "graph", "--n", "5", "--seed", "2"});
  CHECK(load_structure(rg.out).universe_size == 5);
}

TEST_CASE("CLI selftest") { CHECK(cli({"selftest", "--max-n", "4", "--max-k", "2"}).code == 0); }
