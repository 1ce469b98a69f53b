#include "eso/sweeps.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "eso/cardcsp.hpp"
#include "eso/engine.hpp"
#include "eso/error.hpp"
#include "eso/gadgets.hpp"
#include "eso/oracles.hpp"
#include "eso/saturation.hpp"

namespace eso {

std::vector<Graph> graphs_up_to_isomorphism(int n) {
  if (n < 0 || n > 7) fail(ErrorKind::Invalid, "isomorphism classes are enumerated for n <= 7 only");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      index[i][j] = index[j][i] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  const int m = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  // edge-index image of every pair under every permutation
  std::vector<std::vector<int>> image(perms.size(), std::vector<int>(m));
  for (size_t q = 0; q < perms.size(); ++q)
    for (int e = 0; e < m; ++e) image[q][e] = index[perms[q][pairs[e].first]][perms[q][pairs[e].second]];
  std::vector<char> seen(std::size_t{1} << m, 0);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (seen[mask]) continue;
    for (size_t q = 0; q < perms.size(); ++q) {
      std::uint32_t t = 0;
      for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1) t |= 1u << image[q][e];
      seen[t] = 1;
    }
    Graph g(GraphKind::Basic, n);
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

void record(SweepReport& r, bool agree, const std::string& what) {
  ++r.cases;
  if (agree) return;
  if (r.mismatches++ == 0) r.first_mismatch = what;
}

}  // namespace

SweepReport saturation_sweep(int max_n, int max_k) {
  SweepReport r;
  for (int n = 2; n <= max_n; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n))
      for (int idx = 0; idx < 256; ++idx) {
        const PatternGraph p = pattern_from_index(idx);
        for (int k = 0; k <= max_k; ++k) {
          const bool fast = solve_saturation_ge(p, g, k), slow = oracle_saturation(p, g, k);
          if (fast != slow)
            record(r, false, format_pattern(p) + " k=" + std::to_string(k) + " graph:\n" + dump_graph(g));
          else
            record(r, true, "");
        }
      }
  return r;
}

SweepReport csp_sweep(int max_n, int max_k, int per_pair, std::uint64_t seed) {
  SweepReport r;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int c = 0; c < 8; ++c)
    for (int d = 0; d < 8; ++d)
      for (int i = 0; i < per_pair; ++i) {
        CspInstance inst;
        inst.universe_size = static_cast<int>(rng() % (max_n + 1));
        inst.c_set = static_cast<std::uint8_t>(c);
        inst.d_set = static_cast<std::uint8_t>(d);
        inst.k = static_cast<int>(rng() % (max_k + 1));
        inst.unary_allowed = static_cast<std::uint8_t>(i % 4 == 0 ? rng() % 4 : 3);
        inst.c_graph = Graph(GraphKind::Basic, inst.universe_size);
        const double density = unit(rng);
        for (int x = 0; x < inst.universe_size; ++x)
          for (int y = x + 1; y < inst.universe_size; ++y)
            if (unit(rng) < density) inst.c_graph.add_edge(x, y);
        record(r, solve_csp_le(inst) == oracle_csp(inst), dump_csp(inst));
      }
  return r;
}

SweepReport end_to_end_sweep(int max_n, int max_k) {
  SweepReport r;
  for (const auto& [name, entry] : formula_library())
    for (int n = 0; n <= max_n; ++n)
      for (const Graph& g : graphs_up_to_isomorphism(n)) {
        const Structure s = graph_structure(g);
        for (int k = 0; k <= max_k; ++k) {
          const bool fast = solve_dispatch(entry.formula, s, k).answer;
          const bool slow = solve_dispatch(entry.formula, s, k, Route::OracleOnly).answer;
          record(r, fast == slow, name + " k=" + std::to_string(k) + " graph:\n" + dump_graph(g));
        }
      }
  return r;
}

}  // namespace eso
