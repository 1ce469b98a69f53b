#include "eso/engine.hpp"

#include <algorithm>

#include "eso/cardcsp.hpp"
#include "eso/error.hpp"
#include "eso/oracles.hpp"
#include "eso/saturation.hpp"
#include "eso/wsat.hpp"

namespace eso {

StructureClass detect_class(const Structure& s) {
  if (s.signature.size() != 1 || s.signature[0] != std::pair<std::string, int>{"adj", 2}) return StructureClass::Arbitrary;
  return class_of(graph_view(s).detect_kind());
}

namespace {

bool route_applies(Route r, Mode mode, const std::string& word, StructureClass cls) {
  const bool basic = cls == StructureClass::Basic;
  switch (r) {
    case Route::OneWsat: return in_e_star_a(word);
    case Route::SearchTree: return mode == Mode::Le && in_e_star_a_star(word);
    case Route::SaturationBasic: return mode == Mode::Ge && word == "ae" && basic;
    case Route::CspBasic: return mode == Mode::Le && word == "aa" && basic;
    case Route::OracleOnly: return true;
  }
  return false;
}

// Pins the memberships of the elements the existential assignment mentions;
// what is left of every clause is then at most a single literal.
bool run_one_wsat(const Formula& f, const Structure& s, int k, DecisionStats& st) {
  const GroundedInstance g = ground_formula(f, s, k);
  for (size_t i = 0; i < g.disjuncts.size(); ++i) {
    ++st.disjuncts;
    std::vector<int> elems = g.witnesses[i];
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (unsigned bits = 0; bits < (1u << elems.size()); ++bits) {
      std::vector<std::pair<int, bool>> fixed;
      for (size_t j = 0; j < elems.size(); ++j) fixed.emplace_back(elems[j] + 1, (bits >> j) & 1);
      if (solve_1wsat(restrict_instance(g.disjuncts[i], fixed))) return true;
    }
  }
  return false;
}

bool run_search_tree(const Formula& f, const Structure& s, int k, DecisionStats& st) {
  const GroundedInstance g = ground_formula(f, s, k);
  for (const auto& w : g.disjuncts) {
    ++st.disjuncts;
    SearchTreeStats ts;
    const bool yes = solve_wsat_le_searchtree(w, &ts);
    st.nodes += ts.nodes;
    if (yes) return true;
  }
  return false;
}

bool run_saturation(const Formula& f, const Structure& s, int k, DecisionStats& st) {
  const Graph g = graph_view(s);
  if (g.active_count() < 2) {
    st.trace.push_back("fewer than two vertices: oracle");
    return oracle_models(f, s, k);
  }
  PatternGraph p;
  try {
    p = compile_pattern_graph(f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Unsupported) throw;
    st.trace.push_back(std::string("pattern compilation declined (") + e.what() + "): oracle");
    return oracle_models(f, s, k);
  }
  st.trace.push_back(format_pattern(p));
  SaturationTrace tr;
  const bool yes = solve_saturation_ge(p, g, k, &tr);
  st.trace.insert(st.trace.end(), tr.steps.begin(), tr.steps.end());
  return yes;
}

bool run_csp(const Formula& f, const Structure& s, int k, DecisionStats& st) {
  const CspInstance inst = compile_csp(f, graph_view(s), k);
  st.trace.push_back("csp C=" + format_count_set(inst.c_set) + " D=" + format_count_set(inst.d_set) +
                     " unary=" + format_count_set(inst.unary_allowed));
  CspTrace tr;
  const bool yes = solve_csp_le(inst, &tr);
  st.trace.insert(st.trace.end(), tr.steps.begin(), tr.steps.end());
  return yes;
}

}  // namespace

Decision solve_dispatch(const Formula& f, const Structure& s, int k, std::optional<Route> route_override,
                        std::optional<StructureClass> asserted) {
  check_signature(f, s);
  if (k < 0) fail(ErrorKind::Invalid, "k must be non-negative");
  const StructureClass detected = detect_class(s);
  if (asserted && !class_admits(*asserted, detected))
    fail(ErrorKind::Unsupported, std::string("asserted class '") + to_string(*asserted) + "' but the input is '" +
                                     to_string(detected) + "'");
  Decision d;
  d.structure_class = asserted.value_or(detected);
  const Pattern pat = extract_pattern(f);
  d.label = classify_pattern(pat.mode, pat.word, d.structure_class);
  d.route = route_override.value_or(route_for(pat.mode, pat.word, d.structure_class));
  if (!route_applies(d.route, pat.mode, pat.word, d.structure_class))
    fail(ErrorKind::Unsupported, std::string("route ") + to_string(d.route) + " does not apply to " +
                                     to_string(pat.mode) + " '" + pat.word + "' on " + to_string(d.structure_class));
  switch (d.route) {
    case Route::OneWsat: d.answer = run_one_wsat(f, s, k, d.stats); break;
    case Route::SearchTree: d.answer = run_search_tree(f, s, k, d.stats); break;
    case Route::SaturationBasic: d.answer = run_saturation(f, s, k, d.stats); break;
    case Route::CspBasic: d.answer = run_csp(f, s, k, d.stats); break;
    case Route::OracleOnly: d.answer = oracle_models(f, s, k); break;
  }
  return d;
}

}  // namespace eso
