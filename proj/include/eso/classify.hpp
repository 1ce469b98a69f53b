#pragma once

#include <optional>
#include <string>

#include "eso/logic.hpp"

namespace eso {

enum class StructureClass { Arbitrary, Undirected, Basic };
enum class Bucket { InParaAC0, InParaAC0UpNotInParaAC0, ContainsWHard };
enum class Hardness { W1, W2, ParaNP };
enum class Route { OneWsat, SearchTree, SaturationBasic, CspBasic, OracleOnly };

struct ComplexityLabel {
  Bucket bucket = Bucket::InParaAC0;
  std::optional<Hardness> hardness;
  bool operator==(const ComplexityLabel&) const = default;
};

const char* to_string(StructureClass c);
const char* to_string(Bucket b);
const char* to_string(Hardness h);
const char* to_string(Route r);
std::string to_string(const ComplexityLabel& l);
StructureClass parse_structure_class(const std::string& s);
Route parse_route(const std::string& s);

// basic graphs are the most restricted class; arbitrary the least.
StructureClass class_of(GraphKind k);
bool class_admits(StructureClass asserted, StructureClass detected);

ComplexityLabel classify_pattern(Mode mode, const std::string& word, StructureClass cls);
Route route_for(Mode mode, const std::string& word, StructureClass cls);

}  // namespace eso
