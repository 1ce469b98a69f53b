#include "eso/oracles.hpp"

#include <bit>
#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace eso {

OracleLimits& oracle_limits() {
  static OracleLimits limits;
  return limits;
}

namespace {

void require_budget(int n, int cap, const char* what) {
  if (n > cap)
    fail(ErrorKind::OracleBudget,
         std::string("oracle budget exceeded: ") + what + " over " + std::to_string(n) + " elements (cap " +
             std::to_string(cap) + ")");
}

bool weight_ok(Mode m, int weight, int k) {
  switch (m) {
    case Mode::Eq: return weight == k;
    case Mode::Le: return weight <= k;
    case Mode::Ge: return weight >= k;
  }
  return false;
}

bool expand(const Formula& f, const Structure& s, const std::vector<char>& set_value, std::vector<int>& asg,
            size_t depth) {
  if (depth == f.prefix.size()) {
    auto rel = [&](const std::string& name, const Tuple& t) { return s.holds(name, t); };
    auto mem = [&](int u) { return set_value[u] != 0; };
    return eval_expr(f.matrix, asg, rel, mem);
  }
  const bool universal = f.prefix[depth].first == Quant::Forall;
  for (int u = 0; u < s.universe_size; ++u) {
    asg[depth] = u;
    bool r = expand(f, s, set_value, asg, depth + 1);
    if (universal && !r) return false;
    if (!universal && r) return true;
  }
  return universal;
}

}  // namespace

bool oracle_fo_holds(const Formula& f, const Structure& s, const std::vector<char>& set_value) {
  std::vector<int> asg(f.prefix.size(), 0);
  return expand(f, s, set_value, asg, 0);
}

namespace {

// Per full prefix assignment, the matrix as a truth table over the membership
// bits of the assigned positions.  Sets are then checked against these tables.
struct LeafTables {
  int n = 0;
  int m = 0;
  std::vector<std::uint32_t> table;  // index: assignment in base n, position 0 most significant
};

constexpr long long kMaxLeaves = 1LL << 22;

// Dense 0/1 tables for every relation of the structure.
struct DenseRelations {
  int n = 0;
  std::map<std::string, std::vector<char>> tables;

  explicit DenseRelations(const Structure& s) : n(s.universe_size) {
    for (const auto& [name, arity] : s.signature) {
      size_t size = 1;
      for (int i = 0; i < arity; ++i) size *= static_cast<size_t>(n);
      auto& t = tables[name];
      t.assign(size, 0);
      auto it = s.relations.find(name);
      if (it == s.relations.end()) continue;
      for (const auto& tup : it->second) {
        size_t idx = 0;
        for (int x : tup) idx = idx * n + x;
        t[idx] = 1;
      }
    }
  }
  bool holds(const std::string& name, const std::vector<int>& args, const std::vector<int>& asg) const {
    auto it = tables.find(name);
    if (it == tables.end()) return false;
    size_t idx = 0;
    for (int a : args) idx = idx * n + asg[a];
    return it->second[idx] != 0;
  }
};

// Truth vector over all 2^m membership patterns of the prefix positions.
std::uint32_t eval_vec(const Expr& e, const std::vector<int>& asg, const DenseRelations& rel, std::uint32_t all) {
  switch (e.kind) {
    case Expr::True: return all;
    case Expr::False: return 0;
    case Expr::Rel: return rel.holds(e.name, e.args, asg) ? all : 0;
    case Expr::Member: {
      std::uint32_t v = 0;
      for (std::uint32_t mem = 0; (1u << mem) != 0 && (all >> mem) != 0; ++mem)
        if ((mem >> e.args[0]) & 1) v |= 1u << mem;
      return v & all;
    }
    case Expr::Equal: return asg[e.args[0]] == asg[e.args[1]] ? all : 0;
    case Expr::Not: return all & ~eval_vec(e.kids[0], asg, rel, all);
    case Expr::And: {
      std::uint32_t v = all;
      for (const auto& k : e.kids) v &= eval_vec(k, asg, rel, all);
      return v;
    }
    case Expr::Or: {
      std::uint32_t v = 0;
      for (const auto& k : e.kids) v |= eval_vec(k, asg, rel, all);
      return v;
    }
    case Expr::Implies: return all & (~eval_vec(e.kids[0], asg, rel, all) | eval_vec(e.kids[1], asg, rel, all));
    case Expr::Iff: return all & ~(eval_vec(e.kids[0], asg, rel, all) ^ eval_vec(e.kids[1], asg, rel, all));
  }
  return 0;
}

LeafTables build_leaves(const Formula& f, const Structure& s) {
  LeafTables lt;
  lt.n = s.universe_size;
  lt.m = static_cast<int>(f.prefix.size());
  long long count = 1;
  for (int i = 0; i < lt.m; ++i) count *= lt.n;
  lt.table.assign(static_cast<size_t>(count), 0);
  const DenseRelations rel(s);
  const std::uint32_t all = lt.m >= 5 ? 0xffffffffu : (1u << (1 << lt.m)) - 1;
  std::vector<int> asg(lt.m, 0);
  for (long long idx = 0; idx < count; ++idx) {
    long long rest = idx;
    for (int i = lt.m - 1; i >= 0; --i) {
      asg[i] = static_cast<int>(rest % lt.n);
      rest /= lt.n;
    }
    lt.table[static_cast<size_t>(idx)] = eval_vec(f.matrix, asg, rel, all);
  }
  return lt;
}

struct Constraint {
  std::vector<int> elems;  // distinct elements, sorted
  std::uint32_t table;
};

bool leaf_value(const LeafTables& lt, const std::vector<int>& asg, long long idx, std::uint64_t set) {
  int mem = 0;
  for (int i = 0; i < lt.m; ++i) mem |= static_cast<int>((set >> asg[i]) & 1) << i;
  return (lt.table[static_cast<size_t>(idx)] >> mem) & 1;
}

bool expand_fast(const Formula& f, const LeafTables& lt, std::uint64_t set, std::vector<int>& asg, int depth,
                 long long idx) {
  if (depth == lt.m) return leaf_value(lt, asg, idx, set);
  const bool universal = f.prefix[depth].first == Quant::Forall;
  for (int u = 0; u < lt.n; ++u) {
    asg[depth] = u;
    bool r = expand_fast(f, lt, set, asg, depth + 1, idx * lt.n + u);
    if (universal && !r) return false;
    if (!universal && r) return true;
  }
  return universal;
}

template <class Visit>
bool for_each_set_of_size(int n, int size, const Visit& visit) {
  if (size < 0 || size > n) return false;
  if (size == 0) return visit(std::uint64_t{0});
  std::uint64_t set = (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (set < limit) {
    if (visit(set)) return true;
    const std::uint64_t c = set & (~set + 1), r = set + c;
    set = (((r ^ set) >> 2) / c) | r;
  }
  return false;
}

}  // namespace

bool oracle_models(const Formula& f, const Structure& s, int k) {
  check_signature(f, s);
  const int n = s.universe_size;
  require_budget(n, oracle_limits().max_set_elements, "set enumeration");
  int lo = 0, hi = n;
  if (f.mode == Mode::Eq) lo = hi = k;
  if (f.mode == Mode::Le) hi = std::min(k, n);
  if (f.mode == Mode::Ge) lo = std::max(k, 0);
  long long leaves = 1;
  for (size_t i = 0; i < f.prefix.size() && leaves <= kMaxLeaves; ++i) leaves *= std::max(n, 1);
  if (n == 0 || leaves > kMaxLeaves || f.prefix.size() > 5) {
    std::vector<char> set_value(n, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const int weight = std::popcount(mask);
      if (!weight_ok(f.mode, weight, k)) continue;
      for (int u = 0; u < n; ++u) set_value[u] = (mask >> u) & 1;
      if (oracle_fo_holds(f, s, set_value)) return true;
    }
    return false;
  }
  const LeafTables lt = build_leaves(f, s);
  bool all_universal = true;
  for (const auto& q : f.prefix) all_universal = all_universal && q.first == Quant::Forall;
  std::vector<Constraint> cons;
  if (all_universal) {
    // Project each table onto the distinct elements it mentions and keep the
    // distinct non-trivial projections.
    std::set<std::pair<std::vector<int>, std::uint32_t>> seen;
    std::vector<int> asg(lt.m);
    for (long long idx = 0; idx < static_cast<long long>(lt.table.size()); ++idx) {
      long long rest = idx;
      for (int i = lt.m - 1; i >= 0; --i) {
        asg[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      std::vector<int> elems(asg);
      std::sort(elems.begin(), elems.end());
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
      const int r = static_cast<int>(elems.size());
      std::uint32_t proj = 0;
      for (int bits = 0; bits < (1 << r); ++bits) {
        int mem = 0;
        for (int i = 0; i < lt.m; ++i) {
          const int e = static_cast<int>(std::lower_bound(elems.begin(), elems.end(), asg[i]) - elems.begin());
          mem |= ((bits >> e) & 1) << i;
        }
        if ((lt.table[static_cast<size_t>(idx)] >> mem) & 1) proj |= 1u << bits;
      }
      if (proj == ((r >= 5) ? 0xffffffffu : (1u << (1 << r)) - 1)) continue;
      if (seen.emplace(elems, proj).second) cons.push_back({elems, proj});
    }
  }
  std::vector<int> asg(lt.m, 0);
  auto holds = [&](std::uint64_t set) {
    if (!all_universal) return expand_fast(f, lt, set, asg, 0, 0);
    for (const auto& c : cons) {
      int bits = 0;
      for (size_t i = 0; i < c.elems.size(); ++i) bits |= static_cast<int>((set >> c.elems[i]) & 1) << i;
      if (!((c.table >> bits) & 1)) return false;
    }
    return true;
  };
  for (int size = lo; size <= hi; ++size)
    if (for_each_set_of_size(n, size, holds)) return true;
  return false;
}

bool oracle_saturation(const PatternGraph& p, const Graph& g, int k) {
  if (g.kind() != GraphKind::Basic) fail(ErrorKind::Invalid, "saturation needs a basic graph");
  const auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  if (n < 2) fail(ErrorKind::Invalid, "saturation needs at least two vertices");
  require_budget(n, oracle_limits().max_coloring_vertices, "coloring enumeration");
  std::vector<int> color(g.size(), White);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < k) continue;
    for (int i = 0; i < n; ++i) color[verts[i]] = ((mask >> i) & 1) ? Black : White;
    bool ok = true;
    for (int x : verts) {
      bool witnessed = false;
      for (int y : verts) {
        if (y == x) continue;
        bool arc = g.has_edge(x, y) ? p.has_plus(color[x], color[y]) : p.has_minus(color[x], color[y]);
        if (arc) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool oracle_csp(const CspInstance& inst) {
  const int n = inst.universe_size;
  require_budget(n, oracle_limits().max_set_elements, "set enumeration");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) > inst.k) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      int mx = (mask >> x) & 1;
      if (!((inst.unary_allowed >> mx) & 1)) ok = false;
      for (int y = x + 1; y < n && ok; ++y) {
        int count = mx + static_cast<int>((mask >> y) & 1);
        if (!((inst.constraint(x, y) >> count) & 1)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool oracle_wsat(const WcnfInstance& w) {
  const int n = w.num_vars;
  require_budget(n, oracle_limits().max_set_elements, "assignment enumeration");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!weight_ok(w.mode, std::popcount(mask), w.k)) continue;
    bool ok = true;
    for (const auto& c : w.clauses) {
      bool sat = false;
      for (int lit : c) {
        bool val = (mask >> (std::abs(lit) - 1)) & 1;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace eso
