#include "eso/cardcsp.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace eso {

namespace {

bool allows(std::uint8_t set, int count) { return (set >> count) & 1; }

std::uint8_t parse_count_set(const std::string& line, int max_value, int lineno) {
  auto open = line.find('{'), close = line.find('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected '{...}'");
  std::string body = line.substr(open + 1, close - open - 1);
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  std::uint8_t s = 0;
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '0' + max_value)
      fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad count '" + tok + "'");
    s |= static_cast<std::uint8_t>(1u << (tok[0] - '0'));
  }
  return s;
}

}  // namespace

std::string format_count_set(std::uint8_t s) {
  std::string out = "{";
  for (int m = 0; m < 3; ++m)
    if (allows(s, m)) {
      if (out.size() > 1) out += ",";
      out += std::to_string(m);
    }
  return out + "}";
}

CspInstance parse_csp(const std::string& text) {
  CspInstance inst;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (word == "csp") {
      if (!(ls >> inst.universe_size >> inst.k) || inst.universe_size < 0)
        fail(ErrorKind::Parse, where + "expected 'csp <n> <k>'");
      inst.c_graph = Graph(GraphKind::Basic, inst.universe_size);
      header = true;
    } else if (!header) {
      fail(ErrorKind::Parse, where + "'csp <n> <k>' must come first");
    } else if (word == "cset") {
      inst.c_set = parse_count_set(line, 2, lineno);
    } else if (word == "dset") {
      inst.d_set = parse_count_set(line, 2, lineno);
    } else if (word == "unary") {
      inst.unary_allowed = parse_count_set(line, 1, lineno);
    } else if (word == "cpair") {
      int u, v;
      if (!(ls >> u >> v) || u < 0 || v < 0 || u >= inst.universe_size || v >= inst.universe_size || u == v)
        fail(ErrorKind::Parse, where + "expected 'cpair u v' with distinct in-range elements");
      inst.c_graph.add_edge(u, v);
    } else {
      fail(ErrorKind::Parse, where + "unknown directive '" + word + "'");
    }
  }
  if (!header) fail(ErrorKind::Parse, "missing 'csp <n> <k>' header");
  return inst;
}

std::string dump_csp(const CspInstance& c) {
  std::ostringstream out;
  out << "csp " << c.universe_size << ' ' << c.k << '\n';
  out << "cset " << format_count_set(c.c_set) << '\n';
  out << "dset " << format_count_set(c.d_set) << '\n';
  out << "unary " << format_count_set(c.unary_allowed) << '\n';
  for (auto [u, v] : c.c_graph.edges()) out << "cpair " << u << ' ' << v << '\n';
  return out.str();
}

CspInstance compile_csp(const Formula& f, const Graph& g, int k) {
  const Pattern pat = extract_pattern(f);
  if (pat.mode != Mode::Le || pat.word != "aa") fail(ErrorKind::Unsupported, "CSP compilation needs exists<= with prefix aa");
  if (g.kind() != GraphKind::Basic) fail(ErrorKind::Invalid, "CSP compilation needs a basic graph");
  bool edge = false;
  auto rel = [&](const std::string& name, const Tuple& t) {
    if (name != "adj" || t.size() != 2) fail(ErrorKind::Unsupported, "CSP compilation needs the graph signature");
    return t[0] != t[1] && edge;
  };
  auto pair_set = [&](bool e) {
    edge = e;
    std::uint8_t s = 0;
    for (int m = 0; m < 3; ++m) {
      bool ok = true;
      for (int mu = 0; mu < 2 && ok; ++mu) {
        const int mv = m - mu;
        if (mv < 0 || mv > 1) continue;
        auto mem = [&](int a) { return (a == 0 ? mu : mv) == 1; };
        ok = eval_expr(f.matrix, {0, 1}, rel, mem) && eval_expr(f.matrix, {1, 0}, rel, mem);
      }
      if (ok) s |= static_cast<std::uint8_t>(1u << m);
    }
    return s;
  };
  CspInstance inst;
  inst.universe_size = g.active_count();
  inst.k = k;
  inst.c_set = pair_set(false);
  inst.d_set = pair_set(true);
  edge = false;
  inst.unary_allowed = 0;
  for (int m = 0; m < 2; ++m) {
    auto mem = [&](int) { return m == 1; };
    if (eval_expr(f.matrix, {0, 0}, rel, mem)) inst.unary_allowed |= static_cast<std::uint8_t>(1u << m);
  }
  const Graph compact = induced_copy(g);
  inst.c_graph = complement_basic(compact);
  return inst;
}

// ---------------------------------------------------------------------------

namespace {

struct Csp {
  int n;
  std::uint8_t c, d;
  const Graph* cg;
  bool swapped;  // roles of C and D exchanged
  std::uint8_t at(int x, int y) const { return (cg->has_edge(x, y) != swapped) ? c : d; }
  bool is_d(int x, int y) const { return cg->has_edge(x, y) == swapped; }
};

bool check_all(const Csp& p, const std::vector<char>& in, int k) {
  int size = 0;
  for (int x = 0; x < p.n; ++x) size += in[x];
  if (size > k) return false;
  for (int x = 0; x < p.n; ++x)
    for (int y = x + 1; y < p.n; ++y)
      if (!allows(p.at(x, y), in[x] + in[y])) return false;
  return true;
}

bool small_enumeration(const Csp& p, int k) {
  std::vector<char> in(p.n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.n); ++mask) {
    for (int x = 0; x < p.n; ++x) in[x] = (mask >> x) & 1;
    if (check_all(p, in, k)) return true;
  }
  return false;
}

struct Ladder {
  CspTrace* trace;
  void note(const std::string& s) const {
    if (trace) trace->steps.push_back(s);
  }
};

// D lacks 0 and is present, C contains 0.  Every solution covers the D-graph.
bool kernel(const Csp& p, int k, const Ladder& L) {
  L.note("cover-kernel C=" + format_count_set(p.c) + " D=" + format_count_set(p.d));
  const int n = p.n;
  std::vector<int> ddeg(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && p.is_d(x, y)) ++ddeg[x];
  std::vector<char> high(n, 0);
  int h = 0;
  for (int x = 0; x < n; ++x)
    if (ddeg[x] > k) {
      high[x] = 1;
      ++h;
    }
  if (h > k) return false;
  const int budget = k - h;
  // D-edges avoiding H, each of the budget vertices covers at most k of them
  std::vector<char> mid(n, 0);
  long long loose = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (p.is_d(x, y) && !high[x] && !high[y]) {
        ++loose;
        mid[x] = mid[y] = 1;
      }
  if (loose > static_cast<long long>(budget) * k) return false;
  std::vector<int> m_set, l_set;
  for (int x = 0; x < n; ++x) {
    if (high[x]) continue;
    (mid[x] ? m_set : l_set).push_back(x);
  }
  // Pairs inside L are C-pairs: an L-vertex has D-neighbours in H only.
  const int ms = static_cast<int>(m_set.size());
  std::vector<char> in(n, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ms); ++mask) {
    if (h + std::popcount(mask) > k) continue;
    std::fill(in.begin(), in.end(), 0);
    for (int x = 0; x < n; ++x) in[x] = high[x];
    for (int i = 0; i < ms; ++i) in[m_set[i]] = (mask >> i) & 1;
    int forced_in = 0, forced_out = 0;
    std::vector<int> free_l;
    bool dead = false;
    for (int u : l_set) {
      bool can0 = true, can1 = true;
      for (int v = 0; v < n; ++v) {
        if (v == u || (!high[v] && !mid[v])) continue;
        can0 = can0 && allows(p.at(u, v), in[v]);
        can1 = can1 && allows(p.at(u, v), in[v] + 1);
      }
      if (!can0 && !can1) {
        dead = true;
        break;
      }
      if (can0 && can1) {
        free_l.push_back(u);
      } else if (can1) {
        in[u] = 1;
        ++forced_in;
      } else {
        ++forced_out;
      }
    }
    if (dead) continue;
    const int total_l = static_cast<int>(l_set.size());
    for (int t = 0; t <= static_cast<int>(free_l.size()); ++t) {
      const int a = forced_in + t, b = total_l - a;
      const bool ok = (a < 2 || allows(p.c, 2)) && (a < 1 || b < 1 || allows(p.c, 1)) && (b < 2 || allows(p.c, 0));
      if (!ok) continue;
      for (int i = 0; i < t; ++i) in[free_l[i]] = 1;
      if (check_all(p, in, k)) return true;
      break;
    }
  }
  return false;
}

}  // namespace

bool solve_csp_le(const CspInstance& inst, CspTrace* trace) {
  const Ladder L{trace};
  const int n = inst.universe_size;
  const int k = inst.k;
  if (k < 0) return false;
  switch (inst.unary_allowed & 3) {
    case 0:
      L.note("unary-none");
      return n == 0;
    case 1: {
      L.note("unary-out");
      const bool c_used = !inst.c_graph.edges().empty();
      const bool d_used = static_cast<long long>(inst.c_graph.edges().size()) < 1LL * n * (n - 1) / 2;
      return (!c_used || allows(inst.c_set, 0)) && (!d_used || allows(inst.d_set, 0));
    }
    case 2: {
      L.note("unary-in");
      const bool c_used = !inst.c_graph.edges().empty();
      const bool d_used = static_cast<long long>(inst.c_graph.edges().size()) < 1LL * n * (n - 1) / 2;
      return n <= k && (!c_used || allows(inst.c_set, 2)) && (!d_used || allows(inst.d_set, 2));
    }
    default: break;
  }
  if (n <= 1) {
    L.note("no-pairs");
    return true;
  }
  const long long pairs = 1LL * n * (n - 1) / 2;
  const long long c_pairs = static_cast<long long>(inst.c_graph.edges().size());
  Csp p{n, inst.c_set, inst.d_set, &inst.c_graph, false};
  // A set that labels no pair plays no role; let it mirror the other one.
  if (c_pairs == 0) p.c = p.d;
  if (c_pairs == pairs) p.d = p.c;
  if (allows(p.c, 0) && allows(p.d, 0)) {
    L.note("empty-solution");
    return true;
  }
  if (!allows(p.c, 0) && !allows(p.d, 0)) {
    // every pair meets X, so at most one element stays out
    L.note("cover-all-but-one");
    if (n > k + 1) return false;
    return small_enumeration(p, k);
  }
  if (allows(p.d, 0)) {
    L.note("swap");
    std::swap(p.c, p.d);
    p.swapped = true;
  }
  return kernel(p, k, L);
}

}  // namespace eso
