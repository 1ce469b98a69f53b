#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "eso/engine.hpp"
#include "eso/error.hpp"
#include "eso/gadgets.hpp"
#include "eso/oracles.hpp"
#include "eso/sweeps.hpp"

namespace eso {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Invalid, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct FormulaSource {
  std::string file;
  std::string library;

  Formula load() const {
    if (!library.empty()) {
      const auto& lib = formula_library();
      auto it = lib.find(library);
      if (it == lib.end()) fail(ErrorKind::Invalid, "no library formula named " + library);
      return it->second.formula;
    }
    if (file.empty()) fail(ErrorKind::Invalid, "give --formula or --library");
    return parse_formula(read_file(file));
  }
};

void add_formula_options(CLI::App* cmd, FormulaSource& src) {
  auto* f = cmd->add_option("--formula", src.file, "formula file");
  auto* l = cmd->add_option("--library", src.library, "built-in formula name");
  f->excludes(l);
}

nlohmann::json stats_json(const DecisionStats& st) {
  return {{"nodes", st.nodes}, {"disjuncts", st.disjuncts}, {"trace", st.trace}};
}

void report(const Decision& d, bool json, bool trace) {
  if (json) {
    nlohmann::json j = {{"answer", d.answer},
                        {"route", to_string(d.route)},
                        {"label", to_string(d.label)},
                        {"class", to_string(d.structure_class)},
                        {"stats", stats_json(d.stats)}};
    std::cout << j.dump() << '\n';
    return;
  }
  std::cout << (d.answer ? "YES" : "NO") << " (route=" << to_string(d.route) << ")\n";
  std::cout << "label=" << to_string(d.label) << " class=" << to_string(d.structure_class) << '\n';
  if (trace)
    for (const auto& t : d.stats.trace) std::cout << "trace: " << t << '\n';
}

int report_sweep(const char* name, const SweepReport& r) {
  std::cout << name << ": " << r.cases << " cases, " << r.mismatches << " mismatches\n";
  if (!r.ok()) std::cout << "first mismatch:\n" << r.first_mismatch << '\n';
  return r.ok() ? 0 : 1;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return 3;
    case ErrorKind::Unsupported: return 4;
    case ErrorKind::OracleBudget: return 5;
    case ErrorKind::Invalid: return 2;
  }
  return 2;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"weighted existential second-order model checking"};
  app.require_subcommand(1);

  std::string mode, word, cls = "arbitrary";
  bool json = false, trace = false;
  auto* classify = app.add_subcommand("classify", "complexity label and route of a pattern");
  classify->add_option("--mode", mode, "eq, le or ge")->required();
  classify->add_option("--pattern", word, "quantifier word over {a,e}")->required();
  classify->add_option("--class", cls, "arbitrary, undirected or basic");
  classify->add_flag("--json", json);

  FormulaSource src;
  std::string structure_file, route_name, asserted_class;
  int k = 0;
  auto* solve = app.add_subcommand("solve", "decide an instance through the dispatched route");
  add_formula_options(solve, src);
  solve->add_option("--structure", structure_file, "structure file")->required();
  solve->add_option("--k", k, "weight bound")->required();
  solve->add_option("--route", route_name, "force a route");
  solve->add_option("--class", asserted_class, "assert a structure class");
  solve->add_flag("--json", json);
  solve->add_flag("--trace", trace);

  auto* oracle = app.add_subcommand("oracle", "decide an instance by brute force");
  add_formula_options(oracle, src);
  oracle->add_option("--structure", structure_file, "structure file")->required();
  oracle->add_option("--k", k, "weight bound")->required();
  oracle->add_flag("--json", json);

  std::string gen_kind = "mreach", target = "yes";
  int width = 3, layers = 3, n = 6;
  double density = 0.5;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", gen_kind, "mreach or graph")->check(CLI::IsMember({"mreach", "graph"}));
  gen->add_option("--width", width, "vertices per layer (mreach)");
  gen->add_option("--layers", layers, "number of layers (mreach)");
  gen->add_option("--target", target, "yes or no (mreach)")->check(CLI::IsMember({"yes", "no"}));
  gen->add_option("--n", n, "vertex count (graph)");
  gen->add_option("--density", density, "edge probability (graph)");
  gen->add_option("--seed", seed, "random seed");

  std::string reduce_kind, input;
  auto* reduce = app.add_subcommand("reduce", "reachability instance to a graph instance");
  reduce->add_option("--kind", reduce_kind, "aa, aaa or eaa")->required()->check(CLI::IsMember({"aa", "aaa", "eaa"}));
  reduce->add_option("--input", input, "matched-reach file")->required();

  int max_n = 6, max_k = 3;
  auto* selftest = app.add_subcommand("selftest", "fast routes against the oracles");
  selftest->add_option("--max-n", max_n, "largest graph size");
  selftest->add_option("--max-k", max_k, "largest weight bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*classify) {
      const Mode m = parse_mode(mode);
      const StructureClass c = parse_structure_class(cls);
      const ComplexityLabel label = classify_pattern(m, word, c);
      const Route r = route_for(m, word, c);
      if (json)
        std::cout << nlohmann::json{{"label", to_string(label)}, {"route", to_string(r)}}.dump() << '\n';
      else
        std::cout << to_string(label) << '\n' << "route=" << to_string(r) << '\n';
      return 0;
    }
    if (*solve || *oracle) {
      const Formula f = src.load();
      const Structure s = load_structure(read_file(structure_file));
      std::optional<Route> forced;
      if (*oracle)
        forced = Route::OracleOnly;
      else if (!route_name.empty())
        forced = parse_route(route_name);
      std::optional<StructureClass> asserted;
      if (!asserted_class.empty()) asserted = parse_structure_class(asserted_class);
      report(solve_dispatch(f, s, k, forced, asserted), json, trace);
      return 0;
    }
    if (*gen) {
      if (gen_kind == "mreach") {
        const auto m = gen_matched_reach(width, layers, seed, target == "yes" ? ReachTarget::Yes : ReachTarget::No);
        std::cout << dump_mreach(m);
      } else {
        if (n < 0) fail(ErrorKind::Invalid, "--n must be non-negative");
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(density);
        Graph g(GraphKind::Basic, n);
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
        std::cout << dump_graph(g);
      }
      return 0;
    }
    if (*reduce) {
      const auto m = parse_mreach(read_file(input));
      const ReducedInstance r = reduce_kind == "aa"    ? reduce_reach_aa(m)
                                : reduce_kind == "aaa" ? reduce_reach_aaa(m)
                                                       : reduce_reach_eaa(m);
      std::cout << "# k " << r.k << '\n' << dump_graph(r.graph);
      return 0;
    }
    if (*selftest) {
      int rc = 0;
      rc |= report_sweep("saturation", saturation_sweep(max_n, max_k));
      rc |= report_sweep("cardinality-csp", csp_sweep(std::min(max_n, 7), max_k, 20, 7));
      rc |= report_sweep("end-to-end", end_to_end_sweep(max_n, max_k));
      std::cout << (rc == 0 ? "selftest passed" : "selftest FAILED") << '\n';
      return rc;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}

}  // namespace eso
