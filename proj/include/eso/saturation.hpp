#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eso/logic.hpp"
#include "eso/structures.hpp"

namespace eso {

enum Color : int { Black = 0, White = 1 };

// Arc codes: bit (2*source + target) with black = 0, white = 1.
enum Arc : std::uint8_t { BB = 1, BW = 2, WB = 4, WW = 8 };
constexpr std::uint8_t arc_bit(int from, int to) { return static_cast<std::uint8_t>(1u << (2 * from + to)); }

struct PatternGraph {
  std::uint8_t plus = 0;   // arcs usable across an edge
  std::uint8_t minus = 0;  // arcs usable across a non-edge
  bool operator==(const PatternGraph&) const = default;
  bool has_plus(int a, int b) const { return plus & arc_bit(a, b); }
  bool has_minus(int a, int b) const { return minus & arc_bit(a, b); }
};

PatternGraph pattern_from_index(int index);  // 0..255
int pattern_index(const PatternGraph& p);
std::string format_pattern(const PatternGraph& p);
PatternGraph parse_pattern(const std::string& text);

struct SaturationCertificate {
  std::vector<int> coloring;  // per vertex index; -1 for inactive
  std::vector<int> witness;
};
bool check_certificate(const PatternGraph& p, const Graph& g, const SaturationCertificate& c);

PatternGraph compile_pattern_graph(const Formula& f);
PatternGraph normalize_pattern(PatternGraph p);
std::pair<PatternGraph, Graph> mirror_instance(const PatternGraph& p, const Graph& g);

struct SaturationTrace {
  std::vector<std::string> steps;
};

bool solve_saturation_ge(const PatternGraph& p, const Graph& g, int k, SaturationTrace* trace = nullptr);
bool decide_saturation_unweighted(const PatternGraph& p, const Graph& g);
// Exact weight >= k decision through a CNF with a sequential counter.
bool decide_saturation_weight_sat(const PatternGraph& p, const Graph& g, int k);

// Largest number of black vertices over saturating colourings of the active
// vertices, -1 if none exists. Plain enumeration; used below size thresholds.
int max_saturation_weight(const PatternGraph& p, const Graph& g);

}  // namespace eso
