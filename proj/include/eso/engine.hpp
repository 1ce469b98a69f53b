#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eso/classify.hpp"
#include "eso/logic.hpp"
#include "eso/structures.hpp"

namespace eso {

struct DecisionStats {
  size_t nodes = 0;       // search-tree nodes
  size_t disjuncts = 0;   // grounded disjuncts examined
  std::vector<std::string> trace;  // saturation / CSP cases fired, fallbacks taken
};

struct Decision {
  bool answer = false;
  Route route = Route::OracleOnly;
  ComplexityLabel label;
  StructureClass structure_class = StructureClass::Arbitrary;
  DecisionStats stats;
};

// Graph signature gets the detected graph kind; anything else is arbitrary.
StructureClass detect_class(const Structure& s);

// Throws Unsupported when the forced route does not apply to the pattern or
// when `asserted` is a stronger class than the input actually has.
Decision solve_dispatch(const Formula& f, const Structure& s, int k, std::optional<Route> route_override = {},
                        std::optional<StructureClass> asserted = {});

int run_cli(int argc, char** argv);

}  // namespace eso
