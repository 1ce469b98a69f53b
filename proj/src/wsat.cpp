#include "eso/wsat.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace eso {

std::vector<Clause> normalize_clauses(std::vector<Clause> clauses) {
  std::set<Clause> seen;
  std::vector<Clause> out;
  for (auto& c : clauses) {
    std::sort(c.begin(), c.end(), [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
    c.erase(std::unique(c.begin(), c.end()), c.end());
    bool taut = false;
    for (size_t i = 0; i + 1 < c.size(); ++i)
      if (c[i] == -c[i + 1]) taut = true;
    if (taut) continue;
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

WcnfInstance parse_wcnf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int no = 0;
  bool have_header = false;
  WcnfInstance w;
  auto err = [&](const std::string& msg) { fail(ErrorKind::Parse, "line " + std::to_string(no) + ": " + msg); };
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_header) {
      if (first != "wcnf") err("expected 'wcnf <numvars> <mode> <k> <d>'");
      std::string mode;
      if (!(ls >> w.num_vars >> mode >> w.k >> w.d) || w.num_vars < 0 || w.k < 0 || w.d < 0)
        err("malformed wcnf header");
      w.mode = parse_mode(mode);
      have_header = true;
      continue;
    }
    Clause c;
    std::istringstream cs(line);
    std::string tok;
    while (cs >> tok) {
      int lit = 0;
      try {
        size_t pos = 0;
        lit = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        err("bad literal '" + tok + "'");
      }
      if (lit == 0) break;
      if (std::abs(lit) > w.num_vars) err("literal out of range");
      c.push_back(lit);
    }
    w.clauses.push_back(std::move(c));
  }
  if (!have_header) fail(ErrorKind::Parse, "missing wcnf header");
  w.clauses = normalize_clauses(std::move(w.clauses));
  for (const auto& c : w.clauses)
    if (static_cast<int>(c.size()) > w.d) fail(ErrorKind::Parse, "clause wider than declared d");
  return w;
}

std::string dump_wcnf(const WcnfInstance& w) {
  std::ostringstream out;
  out << "wcnf " << w.num_vars << ' ' << to_string(w.mode) << ' ' << w.k << ' ' << w.d << '\n';
  for (const auto& c : w.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

void member_positions(const Expr& e, std::set<int>& out) {
  if (e.kind == Expr::Member) out.insert(e.args[0]);
  for (const auto& k : e.kids) member_positions(k, out);
}

}  // namespace

GroundedInstance ground_formula(const Formula& f, const Structure& s, int k) {
  const std::string word = extract_pattern(f).word;
  if (!in_e_star_a_star(word)) fail(ErrorKind::Unsupported, "grounding needs a prefix in e*a*");
  check_signature(f, s);
  const int n = s.universe_size;
  const int len = static_cast<int>(word.size());
  const int l = static_cast<int>(std::count(word.begin(), word.end(), 'e'));
  std::set<int> pos_set;
  member_positions(f.matrix, pos_set);
  const std::vector<int> positions(pos_set.begin(), pos_set.end());

  auto rel = [&](const std::string& name, const Tuple& t) { return s.holds(name, t); };
  GroundedInstance out;
  std::vector<int> asg(len, 0);

  // Odometer over existential assignments, then over universal tuples.
  auto advance = [&](int from, int to) {
    for (int i = to - 1; i >= from; --i) {
      if (++asg[i] < n) return true;
      asg[i] = 0;
    }
    return false;
  };
  if (n == 0 && len > 0) {
    // no element to bind: existentials fail, a pure universal prefix holds vacuously
    if (l == 0) out.disjuncts.push_back(WcnfInstance{0, {}, 0, k, f.mode});
    return out;
  }
  std::fill(asg.begin(), asg.end(), 0);
  do {
    WcnfInstance w{n, {}, 0, k, f.mode};
    std::fill(asg.begin() + l, asg.end(), 0);
    do {
      std::vector<int> elems;
      for (int p : positions) elems.push_back(asg[p]);
      std::sort(elems.begin(), elems.end());
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
      const int m = static_cast<int>(elems.size());
      for (unsigned bits = 0; bits < (1u << m); ++bits) {
        auto mem = [&](int u) {
          auto it = std::lower_bound(elems.begin(), elems.end(), u);
          return ((bits >> (it - elems.begin())) & 1) != 0;
        };
        if (eval_expr(f.matrix, asg, rel, mem)) continue;
        Clause c;
        for (int i = 0; i < m; ++i) c.push_back(((bits >> i) & 1) ? -(elems[i] + 1) : elems[i] + 1);
        w.clauses.push_back(std::move(c));
      }
    } while (advance(l, len));
    w.clauses = normalize_clauses(std::move(w.clauses));
    for (const auto& c : w.clauses) w.d = std::max(w.d, static_cast<int>(c.size()));
    out.disjuncts.push_back(std::move(w));
    out.witnesses.emplace_back(asg.begin(), asg.begin() + l);
  } while (advance(0, l));
  return out;
}

bool solve_1wsat(const WcnfInstance& w) {
  std::vector<int> forced(w.num_vars + 1, -1);
  for (const auto& c : w.clauses) {
    if (c.size() > 1) fail(ErrorKind::Invalid, "1-WSAT needs unit clauses");
    if (c.empty()) return false;
    int v = std::abs(c[0]);
    int val = c[0] > 0 ? 1 : 0;
    if (forced[v] >= 0 && forced[v] != val) return false;
    forced[v] = val;
  }
  int p = 0, f = 0;
  for (int v = 1; v <= w.num_vars; ++v) {
    if (forced[v] == 1) ++p;
    if (forced[v] == -1) ++f;
  }
  switch (w.mode) {
    case Mode::Eq: return p <= w.k && w.k <= p + f;
    case Mode::Le: return p <= w.k;
    case Mode::Ge: return p + f >= w.k;
  }
  return false;
}

bool all_zero_satisfies(const std::vector<Clause>& rho) {
  for (const auto& c : rho)
    if (std::none_of(c.begin(), c.end(), [](int lit) { return lit < 0; })) return false;
  return true;
}

std::vector<std::vector<Clause>> searchtree_children(const std::vector<Clause>& rho) {
  auto it = std::find_if(rho.begin(), rho.end(), [](const Clause& c) {
    return std::all_of(c.begin(), c.end(), [](int lit) { return lit > 0; });
  });
  std::vector<std::vector<Clause>> out;
  if (it == rho.end()) return out;
  std::vector<int> vars = *it;
  std::sort(vars.begin(), vars.end());
  for (int x : vars) {
    std::vector<Clause> child;
    for (const auto& c : rho) {
      if (std::find(c.begin(), c.end(), x) != c.end()) continue;
      Clause r;
      for (int lit : c)
        if (lit != -x) r.push_back(lit);
      child.push_back(std::move(r));
    }
    out.push_back(std::move(child));
  }
  return out;
}

bool solve_wsat_le_searchtree(const WcnfInstance& w, SearchTreeStats* stats) {
  if (w.mode != Mode::Le) fail(ErrorKind::Invalid, "search tree needs mode le");
  std::set<std::vector<Clause>> level{normalize_clauses(w.clauses)};
  for (int i = 0; i <= w.k; ++i) {
    if (stats) stats->frontier.push_back(level.size());
    std::set<std::vector<Clause>> next;
    for (const auto& rho : level) {
      if (stats) ++stats->nodes;
      if (all_zero_satisfies(rho)) return true;
      if (i == w.k) continue;  // the next level would only be built to be rejected
      for (auto& child : searchtree_children(rho)) {
        if (all_zero_satisfies(child)) return true;
        next.insert(std::move(child));
      }
    }
    level = std::move(next);
  }
  return false;
}

WcnfInstance restrict_instance(const WcnfInstance& w, const std::vector<std::pair<int, bool>>& fixed) {
  std::vector<int> val(w.num_vars + 1, -1);
  for (auto [v, b] : fixed) val[v] = b ? 1 : 0;
  WcnfInstance out = w;
  out.clauses.clear();
  for (const auto& c : w.clauses) {
    Clause r;
    bool sat = false;
    for (int lit : c) {
      int v = val[std::abs(lit)];
      if (v < 0) r.push_back(lit);
      else if ((lit > 0) == (v == 1)) sat = true;
    }
    if (!sat) out.clauses.push_back(std::move(r));
  }
  for (auto [v, b] : fixed) out.clauses.push_back({b ? v : -v});
  out.clauses = normalize_clauses(std::move(out.clauses));
  out.d = 0;
  for (const auto& c : out.clauses) out.d = std::max(out.d, static_cast<int>(c.size()));
  return out;
}

namespace {

bool dpll(std::vector<signed char>& val, const std::vector<Clause>& clauses) {
  // unit propagation to fixpoint
  std::vector<int> trail;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : clauses) {
      int unassigned = 0, last = 0;
      bool sat = false;
      for (int lit : c) {
        int v = val[std::abs(lit)];
        if (v < 0) {
          ++unassigned;
          last = lit;
        } else if ((lit > 0) == (v == 1)) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      if (unassigned == 0) {
        for (int v : trail) val[v] = -1;
        return false;
      }
      if (unassigned == 1) {
        val[std::abs(last)] = last > 0 ? 1 : 0;
        trail.push_back(std::abs(last));
        changed = true;
      }
    }
  }
  // Branch on the lowest-numbered open variable of an open clause, so encoders
  // can put their decision variables first and leave the rest to propagation.
  int pick = 0;
  for (const auto& c : clauses) {
    bool sat = false;
    int cand = 0;
    for (int lit : c) {
      int v = val[std::abs(lit)];
      if (v < 0) {
        if (!cand || std::abs(lit) < cand) cand = std::abs(lit);
      } else if ((lit > 0) == (v == 1)) {
        sat = true;
        break;
      }
    }
    if (!sat && cand && (!pick || cand < pick)) pick = cand;
  }
  if (pick == 0) return true;
  for (int b : {1, 0}) {
    val[pick] = static_cast<signed char>(b);
    if (dpll(val, clauses)) return true;
  }
  val[pick] = -1;
  for (int v : trail) val[v] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<char>> exact_sat(int num_vars, const std::vector<Clause>& clauses) {
  std::vector<signed char> val(num_vars + 1, -1);
  if (!dpll(val, clauses)) return std::nullopt;
  std::vector<char> out(num_vars, 0);
  for (int v = 1; v <= num_vars; ++v) out[v - 1] = val[v] == 1;
  return out;
}

}  // namespace eso
