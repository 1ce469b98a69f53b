#include "eso/classify.hpp"

namespace eso {

const char* to_string(StructureClass c) {
  switch (c) {
    case StructureClass::Arbitrary: return "arbitrary";
    case StructureClass::Undirected: return "undirected";
    case StructureClass::Basic: return "basic";
  }
  return "?";
}

const char* to_string(Bucket b) {
  switch (b) {
    case Bucket::InParaAC0: return "InParaAC0";
    case Bucket::InParaAC0UpNotInParaAC0: return "InParaAC0UpNotInParaAC0";
    case Bucket::ContainsWHard: return "ContainsWHard";
  }
  return "?";
}

const char* to_string(Hardness h) {
  switch (h) {
    case Hardness::W1: return "W1";
    case Hardness::W2: return "W2";
    case Hardness::ParaNP: return "ParaNP";
  }
  return "?";
}

const char* to_string(Route r) {
  switch (r) {
    case Route::OneWsat: return "OneWsat";
    case Route::SearchTree: return "SearchTree";
    case Route::SaturationBasic: return "SaturationBasic";
    case Route::CspBasic: return "CspBasic";
    case Route::OracleOnly: return "OracleOnly";
  }
  return "?";
}

std::string to_string(const ComplexityLabel& l) {
  std::string out = to_string(l.bucket);
  if (l.hardness) out += std::string("(") + to_string(*l.hardness) + ")";
  return out;
}

StructureClass parse_structure_class(const std::string& s) {
  if (s == "arbitrary" || s == "digraph" || s == "directed") return StructureClass::Arbitrary;
  if (s == "undirected") return StructureClass::Undirected;
  if (s == "basic") return StructureClass::Basic;
  fail(ErrorKind::Parse, "unknown structure class '" + s + "'");
}

Route parse_route(const std::string& s) {
  for (Route r : {Route::OneWsat, Route::SearchTree, Route::SaturationBasic, Route::CspBasic, Route::OracleOnly})
    if (s == to_string(r)) return r;
  fail(ErrorKind::Parse, "unknown route '" + s + "'");
}

StructureClass class_of(GraphKind k) {
  switch (k) {
    case GraphKind::Basic: return StructureClass::Basic;
    case GraphKind::Undirected: return StructureClass::Undirected;
    case GraphKind::Directed: return StructureClass::Arbitrary;
  }
  return StructureClass::Arbitrary;
}

bool class_admits(StructureClass asserted, StructureClass detected) {
  return static_cast<int>(asserted) <= static_cast<int>(detected);
}

namespace {

ComplexityLabel easy() { return {Bucket::InParaAC0, std::nullopt}; }
ComplexityLabel hard(Hardness h) { return {Bucket::ContainsWHard, h}; }

}  // namespace

ComplexityLabel classify_pattern(Mode mode, const std::string& word, StructureClass cls) {
  const bool basic = cls == StructureClass::Basic;
  const bool has_ae = is_subsequence("ae", word);
  if (in_e_star_a(word)) return easy();
  switch (mode) {
    case Mode::Eq:
      return hard(has_ae ? Hardness::W2 : Hardness::W1);
    case Mode::Ge:
      if (!basic) return hard(has_ae ? Hardness::ParaNP : Hardness::W1);
      if (below_ae(word)) return easy();
      if (is_subsequence("eae", word) || is_subsequence("aee", word)) return hard(Hardness::ParaNP);
      return hard(Hardness::W1);
    case Mode::Le:
      if (has_ae) return hard(Hardness::W2);
      // no 'a' before an 'e' and not in e*a: the word lies in e*a* and contains aa
      if (basic && word == "aa") return easy();
      return {Bucket::InParaAC0UpNotInParaAC0, std::nullopt};
  }
  return easy();
}

Route route_for(Mode mode, const std::string& word, StructureClass cls) {
  const bool basic = cls == StructureClass::Basic;
  if (in_e_star_a(word)) return Route::OneWsat;
  if (mode == Mode::Le && word == "aa" && basic) return Route::CspBasic;
  if (mode == Mode::Ge && word == "ae" && basic) return Route::SaturationBasic;
  if (mode == Mode::Le && in_e_star_a_star(word)) return Route::SearchTree;
  return Route::OracleOnly;
}

}  // namespace eso
