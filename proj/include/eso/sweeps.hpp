#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eso/structures.hpp"

namespace eso {

// One representative per isomorphism class of basic graphs on n vertices (n <= 7).
std::vector<Graph> graphs_up_to_isomorphism(int n);

struct SweepReport {
  long long cases = 0;
  long long mismatches = 0;
  std::string first_mismatch;
  bool ok() const { return mismatches == 0; }
};

// Fast solver against the brute-force oracle, case by case.
SweepReport saturation_sweep(int max_n, int max_k);
SweepReport csp_sweep(int max_n, int max_k, int per_pair, std::uint64_t seed);
SweepReport end_to_end_sweep(int max_n, int max_k);

}  // namespace eso
