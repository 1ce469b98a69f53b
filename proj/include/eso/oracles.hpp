#pragma once

#include "eso/cardcsp.hpp"
#include "eso/logic.hpp"
#include "eso/saturation.hpp"
#include "eso/structures.hpp"
#include "eso/wsat.hpp"

namespace eso {

struct OracleLimits {
  int max_set_elements = 20;
  int max_coloring_vertices = 16;
};

OracleLimits& oracle_limits();

bool oracle_models(const Formula& f, const Structure& s, int k);
// Does the first-order part hold with the set variable fixed?
bool oracle_fo_holds(const Formula& f, const Structure& s, const std::vector<char>& set_value);
bool oracle_saturation(const PatternGraph& p, const Graph& g, int k);
bool oracle_csp(const CspInstance& inst);
bool oracle_wsat(const WcnfInstance& w);

}  // namespace eso
