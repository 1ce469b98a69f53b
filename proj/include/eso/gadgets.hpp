#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eso/logic.hpp"
#include "eso/structures.hpp"

namespace eso {

// Layered graph of `layers` layers of `width` vertices; matchings[j][i] is the
// successor in layer j+1 of vertex i in layer j. Vertices are 0-based here and
// 1-based in the text format.
struct MatchedReachInstance {
  int width = 0;
  int layers = 0;
  std::vector<std::vector<int>> matchings;
  int s = 0;  // in layer 0
  int t = 0;  // in the last layer

  int vertex(int i, int layer) const { return layer * width + i; }
  int endpoint_of_s() const;
  bool reachable() const { return endpoint_of_s() == t; }
};

enum class ReachTarget { Yes, No };

MatchedReachInstance gen_matched_reach(int width, int layers, std::uint64_t seed, ReachTarget target);
void validate(const MatchedReachInstance& m);
MatchedReachInstance parse_mreach(const std::string& text);
std::string dump_mreach(const MatchedReachInstance& m);

struct ReducedInstance {
  Graph graph;
  int k = 0;
};

ReducedInstance reduce_reach_aa(const MatchedReachInstance& m);
ReducedInstance reduce_reach_aaa(const MatchedReachInstance& m);
ReducedInstance reduce_reach_eaa(const MatchedReachInstance& m);

struct LibraryEntry {
  std::string name;
  std::string text;
  Formula formula;
};

// Parsed once; ordered by name.
const std::map<std::string, LibraryEntry>& formula_library();

// Three set variables, so it is kept as text only.
extern const char* const kThreeColoringText;

}  // namespace eso
