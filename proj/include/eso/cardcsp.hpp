#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eso/logic.hpp"
#include "eso/structures.hpp"

namespace eso {

// Count sets are bitmasks over {0,1,2}; unary_allowed over {0,1}.
struct CspInstance {
  int universe_size = 0;
  std::uint8_t c_set = 0;
  std::uint8_t d_set = 0;
  Graph c_graph{GraphKind::Basic, 0};  // edges are the pairs mapped to c_set
  std::uint8_t unary_allowed = 3;
  int k = 0;

  std::uint8_t constraint(int x, int y) const { return c_graph.has_edge(x, y) ? c_set : d_set; }
};

std::string format_count_set(std::uint8_t s);
CspInstance parse_csp(const std::string& text);
std::string dump_csp(const CspInstance& c);

CspInstance compile_csp(const Formula& f, const Graph& g, int k);

struct CspTrace {
  std::vector<std::string> steps;
};
bool solve_csp_le(const CspInstance& inst, CspTrace* trace = nullptr);

}  // namespace eso
