#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eso/logic.hpp"

namespace eso {

using Clause = std::vector<int>;  // signed, 1-based literals

struct WcnfInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;
  int d = 0;
  int k = 0;
  Mode mode = Mode::Le;
};

struct GroundedInstance {
  std::vector<WcnfInstance> disjuncts;
  std::vector<std::vector<int>> witnesses;  // existential assignment of each disjunct
};

WcnfInstance parse_wcnf(const std::string& text);
std::string dump_wcnf(const WcnfInstance& w);

// Sorts literals, drops duplicate literals, tautologies and duplicate clauses.
std::vector<Clause> normalize_clauses(std::vector<Clause> clauses);

GroundedInstance ground_formula(const Formula& f, const Structure& s, int k);

bool solve_1wsat(const WcnfInstance& w);

struct SearchTreeStats {
  std::vector<size_t> frontier;  // |Ψ_i| per level reached
  size_t nodes = 0;
};
bool solve_wsat_le_searchtree(const WcnfInstance& w, SearchTreeStats* stats = nullptr);

std::optional<std::vector<char>> exact_sat(int num_vars, const std::vector<Clause>& clauses);

}  // namespace eso

namespace eso {

// One level of the bounded search tree on a residual formula.
bool all_zero_satisfies(const std::vector<Clause>& rho);
std::vector<std::vector<Clause>> searchtree_children(const std::vector<Clause>& rho);

// Fixes the given variables to the given values and returns the residual
// instance; clauses falsified completely become the empty clause.
WcnfInstance restrict_instance(const WcnfInstance& w, const std::vector<std::pair<int, bool>>& fixed);

}  // namespace eso
