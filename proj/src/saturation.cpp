#include "eso/saturation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "eso/wsat.hpp"

namespace eso {

PatternGraph pattern_from_index(int index) {
  return PatternGraph{static_cast<std::uint8_t>(index & 15), static_cast<std::uint8_t>((index >> 4) & 15)};
}

int pattern_index(const PatternGraph& p) { return p.plus | (p.minus << 4); }

namespace {

const char* kArcNames[4] = {"bb", "bw", "wb", "ww"};

std::string arc_set(std::uint8_t s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 4; ++i)
    if (s & (1u << i)) {
      out += first ? "" : ",";
      out += kArcNames[i];
      first = false;
    }
  return out + "}";
}

std::uint8_t parse_arc_set(const std::string& body) {
  std::uint8_t s = 0;
  std::string tok;
  std::istringstream in(body);
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    int found = -1;
    for (int i = 0; i < 4; ++i)
      if (tok == kArcNames[i]) found = i;
    if (found < 0) fail(ErrorKind::Parse, "unknown arc code '" + tok + "'");
    s |= static_cast<std::uint8_t>(1u << found);
  }
  return s;
}

}  // namespace

std::string format_pattern(const PatternGraph& p) {
  return "pattern plus " + arc_set(p.plus) + " minus " + arc_set(p.minus);
}

PatternGraph parse_pattern(const std::string& text) {
  std::string t = text;
  if (auto h = t.find('#'); h != std::string::npos) t.erase(h);
  auto grab = [&](const std::string& key) -> std::uint8_t {
    auto at = t.find(key);
    if (at == std::string::npos) fail(ErrorKind::Parse, "pattern: missing '" + key + "'");
    auto open = t.find('{', at), close = t.find('}', at);
    if (open == std::string::npos || close == std::string::npos || close < open)
      fail(ErrorKind::Parse, "pattern: expected '{...}' after '" + key + "'");
    return parse_arc_set(t.substr(open + 1, close - open - 1));
  };
  if (t.find("pattern") == std::string::npos) fail(ErrorKind::Parse, "expected 'pattern plus {...} minus {...}'");
  return PatternGraph{grab("plus"), grab("minus")};
}

bool check_certificate(const PatternGraph& p, const Graph& g, const SaturationCertificate& c) {
  for (int x : g.vertices()) {
    int y = c.witness[x];
    if (y < 0 || y >= g.size() || y == x || !g.active(y)) return false;
    bool ok = g.has_edge(x, y) ? p.has_plus(c.coloring[x], c.coloring[y]) : p.has_minus(c.coloring[x], c.coloring[y]);
    if (!ok) return false;
  }
  return true;
}

PatternGraph compile_pattern_graph(const Formula& f) {
  const Pattern pat = extract_pattern(f);
  if (pat.mode != Mode::Ge || pat.word != "ae") fail(ErrorKind::Unsupported, "pattern-graph compilation needs exists>= with prefix ae");
  bool edge = false;
  auto rel = [&](const std::string& name, const Tuple& t) {
    if (name != "adj" || t.size() != 2) fail(ErrorKind::Unsupported, "pattern-graph compilation needs the graph signature");
    return t[0] != t[1] && edge;
  };
  // self-witness: y bound to the same element as x
  for (int m = 0; m < 2; ++m) {
    auto mem = [&](int) { return m == 1; };
    if (eval_expr(f.matrix, {0, 0}, rel, mem))
      fail(ErrorKind::Unsupported, "self-witness unsupported: the matrix holds with y = x");
  }
  PatternGraph p;
  for (int e = 0; e < 2; ++e) {
    edge = e == 1;
    for (int cx = 0; cx < 2; ++cx)
      for (int cy = 0; cy < 2; ++cy) {
        auto mem = [&](int u) { return (u == 0 ? cx : cy) == Black; };
        if (eval_expr(f.matrix, {0, 1}, rel, mem)) (edge ? p.plus : p.minus) |= arc_bit(cx, cy);
      }
  }
  return p;
}

PatternGraph normalize_pattern(PatternGraph p) {
  for (bool changed = true; changed;) {
    changed = false;
    const std::uint8_t all = p.plus | p.minus;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const bool leaves_b = all & (arc_bit(b, 0) | arc_bit(b, 1));
        if (leaves_b) continue;
        const std::uint8_t bit = arc_bit(a, b);
        if ((p.plus | p.minus) & bit) {
          p.plus &= static_cast<std::uint8_t>(~bit);
          p.minus &= static_cast<std::uint8_t>(~bit);
          changed = true;
        }
      }
  }
  return p;
}

std::pair<PatternGraph, Graph> mirror_instance(const PatternGraph& p, const Graph& g) {
  return {PatternGraph{p.minus, p.plus}, complement_basic(g)};
}

// ---------------------------------------------------------------------------
// Exact fallbacks.

namespace {

struct ClassView {
  std::vector<int> rep;              // one representative per twin class
  std::vector<int> size;
  std::vector<char> clique;          // members pairwise adjacent
  std::vector<std::vector<char>> adj;  // between classes
};

ClassView twin_classes(const Graph& g) {
  const TwinQuotient q = twin_quotient(g);
  ClassView cv;
  std::map<int, int> index;
  for (int v : g.vertices()) {
    int r = q.rep[v];
    auto [it, fresh] = index.emplace(r, static_cast<int>(cv.rep.size()));
    if (fresh) {
      cv.rep.push_back(r);
      cv.size.push_back(0);
      cv.clique.push_back(0);
    }
    ++cv.size[it->second];
    if (v != r && g.has_edge(v, r)) cv.clique[it->second] = 1;
  }
  const size_t c = cv.rep.size();
  cv.adj.assign(c, std::vector<char>(c, 0));
  for (size_t i = 0; i < c; ++i)
    for (size_t j = 0; j < c; ++j)
      if (i != j) cv.adj[i][j] = g.has_edge(cv.rep[i], cv.rep[j]);
  return cv;
}

bool arc_ok(const PatternGraph& p, bool edge, int a, int b) { return edge ? p.has_plus(a, b) : p.has_minus(a, b); }

// Largest weight over colourings described by per-class black counts.  Within
// a class only the capped counts (0, 1, 2+) of each colour matter for witness
// feasibility, so the candidate counts below cover every optimum.
int class_max_weight(const PatternGraph& p, const ClassView& cv) {
  const size_t c = cv.rep.size();
  std::vector<std::vector<int>> cands(c);
  for (size_t i = 0; i < c; ++i) {
    const int s = cv.size[i];
    for (int b : {0, 1, 2, s - 2, s - 1, s})
      if (b >= 0 && b <= s && std::find(cands[i].begin(), cands[i].end(), b) == cands[i].end()) cands[i].push_back(b);
    std::sort(cands[i].rbegin(), cands[i].rend());
  }
  std::vector<size_t> pick(c, 0);
  std::vector<int> black(c), white(c);
  int best = -1;
  for (;;) {
    int weight = 0;
    for (size_t i = 0; i < c; ++i) {
      black[i] = cands[i][pick[i]];
      white[i] = cv.size[i] - black[i];
      weight += black[i];
    }
    if (weight > best) {
      bool ok = true;
      for (size_t i = 0; i < c && ok; ++i) {
        for (int col = 0; col < 2 && ok; ++col) {
          if ((col == Black ? black[i] : white[i]) == 0) continue;
          bool found = false;
          for (size_t j = 0; j < c && !found; ++j) {
            for (int other = 0; other < 2 && !found; ++other) {
              int avail = other == Black ? black[j] : white[j];
              if (i == j && other == col) --avail;
              if (avail <= 0) continue;
              const bool edge = i == j ? cv.clique[i] != 0 : cv.adj[i][j] != 0;
              found = arc_ok(p, edge, col, other);
            }
          }
          ok = found;
        }
      }
      if (ok) best = weight;
    }
    size_t i = 0;
    while (i < c && ++pick[i] == cands[i].size()) pick[i++] = 0;
    if (i == c) break;
  }
  return best;
}

// Colour variables 1..n (true = black), witness selectors after them.
struct SatEncoding {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<int> color_var;  // per vertex index, 0 if inactive
};

SatEncoding encode_saturation(const PatternGraph& p, const Graph& g) {
  SatEncoding enc;
  const auto verts = g.vertices();
  enc.color_var.assign(g.size(), 0);
  for (int v : verts) enc.color_var[v] = ++enc.num_vars;
  for (int x : verts) {
    Clause some;
    for (int y : verts) {
      if (y == x) continue;
      const bool edge = g.has_edge(x, y);
      std::vector<std::pair<int, int>> banned;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          if (!arc_ok(p, edge, a, b)) banned.emplace_back(a, b);
      if (banned.size() == 4) continue;
      const int s = ++enc.num_vars;
      some.push_back(s);
      // black = true literal; these say "x (y) does not have colour a (b)"
      auto not_x = [&](int a) { return a == Black ? -enc.color_var[x] : enc.color_var[x]; };
      auto not_y = [&](int b) { return b == Black ? -enc.color_var[y] : enc.color_var[y]; };
      for (auto [a, b] : banned) enc.clauses.push_back({-s, not_x(a), not_y(b)});
      // Binary consequences, so that propagation sees a dead colour at once.
      for (int a = 0; a < 2; ++a)
        if (!arc_ok(p, edge, a, Black) && !arc_ok(p, edge, a, White)) enc.clauses.push_back({-s, not_x(a)});
      for (int b = 0; b < 2; ++b)
        if (!arc_ok(p, edge, Black, b) && !arc_ok(p, edge, White, b)) enc.clauses.push_back({-s, not_y(b)});
    }
    enc.clauses.push_back(some);  // empty clause if x can never be witnessed
  }
  return enc;
}

// Appends "at least k of lits are true" as a sequential counter.
void at_least(SatEncoding& enc, const std::vector<int>& lits, int k) {
  if (k <= 0) return;
  const int n = static_cast<int>(lits.size());
  if (k > n) {
    enc.clauses.push_back({});
    return;
  }
  // r[i][j]: at least j of the first i literals are true (j = 1..k)
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(k + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j) r[i][j] = ++enc.num_vars;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j) {
      Clause a{-r[i][j], lits[i - 1]}, b{-r[i][j]};
      if (i > 1) a.push_back(r[i - 1][j]);
      if (j > 1) {
        if (i == 1) {
          enc.clauses.push_back({-r[i][j]});
          continue;
        }
        b.push_back(r[i - 1][j - 1]);
        if (i > 1) b.push_back(r[i - 1][j]);
        enc.clauses.push_back(b);
      }
      enc.clauses.push_back(a);
    }
  enc.clauses.push_back({r[n][k]});
}

}  // namespace

bool decide_saturation_weight_sat(const PatternGraph& p, const Graph& g, int k) {
  SatEncoding enc = encode_saturation(p, g);
  std::vector<int> lits;
  for (int v : g.vertices()) lits.push_back(enc.color_var[v]);
  at_least(enc, lits, k);
  return exact_sat(enc.num_vars, enc.clauses).has_value();
}

namespace {

bool saturates(const PatternGraph& p, const Graph& g, const std::vector<char>& black);

constexpr int kMaxEnumeratedClasses = 20;

bool brute(const PatternGraph& p, const Graph& g, int k, SaturationTrace* trace) {
  if (trace) trace->steps.push_back("brute-force");
  if (g.active_count() < 2) return false;
  ClassView cv = twin_classes(g);
  if (static_cast<int>(cv.rep.size()) <= kMaxEnumeratedClasses) return class_max_weight(p, cv) >= k;
  return decide_saturation_weight_sat(p, g, k);
}

// ---------------------------------------------------------------------------
// Case ladder.

bool is_edgeless(const Graph& g) {
  for (int v : g.vertices())
    if (g.degree(v) > 0) return false;
  return true;
}

bool is_clique(const Graph& g) {
  for (int v : g.vertices())
    if (!g.universal(v)) return false;
  return true;
}

// Witness choice depends only on colour counts when every pair has the same
// adjacency.
int uniform_max_weight(std::uint8_t arcs, int n) {
  auto has = [&](int a, int b) { return (arcs & arc_bit(a, b)) != 0; };
  for (int b = n; b >= 0; --b) {
    const int w = n - b;
    const bool black_ok = b == 0 || (has(Black, Black) && b >= 2) || (has(Black, White) && w >= 1);
    const bool white_ok = w == 0 || (has(White, White) && w >= 2) || (has(White, Black) && b >= 1);
    if (black_ok && white_ok) return b;
  }
  return -1;
}

std::vector<int> isolated_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v : g.vertices())
    if (g.isolated(v)) out.push_back(v);
  return out;
}

std::vector<int> universal_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v : g.vertices())
    if (g.universal(v)) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> isolated_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges())
    if (g.degree(u) == 1 && g.degree(v) == 1) out.emplace_back(u, v);
  return out;
}

bool has_component_of_size_at_least(const Graph& g, size_t s) {
  for (const auto& c : components(g))
    if (c.size() >= s) return true;
  return false;
}

struct Ladder {
  SaturationTrace* trace;
  void note(const std::string& s) const {
    if (trace) trace->steps.push_back(s);
  }
};

// Black loop across edges; no black loop across non-edges.
bool black_loop(const PatternGraph& p, const Graph& g, int k, const Ladder& L) {
  const int n = g.active_count();
  const auto iso = isolated_vertices(g);
  if (p.has_minus(Black, Black)) {
    L.note("black-loop/all-black");
    return n >= k;
  }
  if (p.minus == 0) {
    L.note("black-loop/edges-only");
    return iso.empty() && n >= k;
  }
  if (p.has_minus(White, Black)) {
    L.note("black-loop/white-to-black-non-edge");
    if (!p.has_minus(Black, White)) return n - static_cast<int>(iso.size()) >= k;
    return (iso.empty() ? n : n - 1) >= k;
  }
  if (p.has_minus(White, White)) {
    L.note("black-loop/white-non-edge-loop");
    if (iso.empty()) return n >= k;
    if (!p.has_minus(Black, White)) {
      if (iso.size() != 1) return n - static_cast<int>(iso.size()) >= k;
      const int bound = has_component_of_size_at_least(g, 3) ? n - 2 : n - 3;
      if (bound >= k) return true;
      return brute(p, g, k, L.trace);
    }
    if (n - 2 >= k) return true;
    return brute(p, g, k, L.trace);
  }
  // only the black-to-white non-edge arc remains in A-minus
  assert(p.minus == arc_bit(Black, White));
  if (iso.empty()) {
    L.note("black-loop/no-isolated");
    return n >= k;
  }
  if (p.has_plus(White, White)) {
    L.note("black-loop/private-neighbour-edge");
    if (n - 3 >= k) return true;
    return brute(p, g, k, L.trace);
  }
  L.note("black-loop/isolated-need-white-leaf");
  assert(p.has_plus(White, Black));
  const int non_isolated = n - static_cast<int>(iso.size());
  if (non_isolated == 2) {
    // isolated vertices plus a single edge
    if (!p.has_plus(Black, White)) return false;
    return n - 1 >= k;
  }
  const int bound = has_component_of_size_at_least(g, 3) ? n - 1 : n - 2;
  if (bound >= k) return true;
  return brute(p, g, k, L.trace);
}

// Proper leaves of a spanning tree of the component containing `start`,
// rooted at its smallest leaf.
int proper_leaves(const Graph& g, int start) {
  auto parent = bfs_tree(g, start);
  std::vector<int> tree_degree(g.size(), 0);
  int size = 0;
  for (int v : g.vertices())
    if (parent[v] >= 0) {
      ++tree_degree[v];
      ++tree_degree[parent[v]];
    }
  int leaves = 0;
  for (int v : g.vertices())
    if (tree_degree[v] > 0) {
      ++size;
      if (tree_degree[v] == 1) ++leaves;
    }
  return size >= 3 ? leaves - 1 : 0;
}

// White loop across edges plus black-to-white across edges only.
bool spanning_trees(const PatternGraph& p, Graph g, int k, const Ladder& L) {
  L.note("white-loop/spanning-trees");
  const auto iso = isolated_vertices(g);
  const bool iso_witness = p.has_minus(White, White) || p.has_minus(White, Black);
  if (!iso.empty() && !iso_witness) return false;
  for (size_t i = 2; i < iso.size(); ++i) g.remove_vertex(iso[i]);

  auto matched = isolated_edges(g);
  const bool half_black = p.has_plus(White, Black) || p.has_minus(White, White) || p.has_minus(White, Black);
  if (!half_black) {
    for (auto [u, v] : matched) {
      g.remove_vertex(u);
      g.remove_vertex(v);
    }
    if (g.active_count() < 2) return false;
  } else if (matched.size() >= 2) {
    if (static_cast<int>(matched.size()) >= k) return true;
    for (size_t i = 2; i < matched.size(); ++i) {
      g.remove_vertex(matched[i].first);
      g.remove_vertex(matched[i].second);
    }
    k -= static_cast<int>(matched.size()) - 2;
  }

  Graph core = g;
  for (int v : isolated_vertices(core)) core.remove_vertex(v);
  for (auto [u, v] : isolated_edges(core)) {
    core.remove_vertex(u);
    core.remove_vertex(v);
  }
  if (core.active_count() > 0) {
    const auto comps = components(core);
    int total_leaves = 0, best_leaves = 0;
    for (const auto& c : comps) {
      int l = proper_leaves(core, c[0]);
      total_leaves += l;
      best_leaves = std::max(best_leaves, l);
    }
    if (static_cast<int>(comps.size()) >= k || best_leaves >= k) return true;
    const long long kk = k;
    if (core.active_count() > 3 * kk * kk * kk + 2 * kk * kk) return true;
  }
  return brute(p, g, k, L.trace);
}

// White loop across non-edges plus black-to-white across edges only.
bool universal_and_matching(const PatternGraph& p, const Graph& g, int k, const Ladder& L) {
  L.note("white-loop/universal-and-matching");
  const auto uni = universal_vertices(g);
  if (static_cast<int>(uni.size()) >= k) return true;
  Graph r = g;
  for (int u : uni) r.remove_vertex(u);
  const int kr = k - static_cast<int>(uni.size());
  for (int v : r.vertices())
    if (r.degree(v) >= kr && !r.universal(v)) return true;
  for (int v : isolated_vertices(r)) r.remove_vertex(v);
  const long long edges = static_cast<long long>(r.edges().size());
  const auto matching = greedy_matching(r);
  if (edges >= 2LL * kr * kr && static_cast<int>(matching.size()) >= kr) return true;
  if (static_cast<int>(matching.size()) >= kr) {
    // the matching colouring may still work below the edge bound; check it
    for (int side = 0; side < 2; ++side) {
      std::vector<char> black(g.size(), 0);
      for (int u : uni) black[u] = 1;
      for (int i = 0; i < kr; ++i) black[side ? matching[i].second : matching[i].first] = 1;
      if (saturates(p, g, black)) return true;
    }
  }
  return brute(p, g, k, L.trace);
}

// Black-to-white and white-to-black both across edges.
bool alternating(const PatternGraph& p, const Graph& g, int k, const Ladder& L) {
  L.note("no-loop/alternating");
  const int n = g.active_count();
  const auto iso = isolated_vertices(g);
  const bool bw = p.has_minus(Black, White), wb = p.has_minus(White, Black);
  int comps = 0, big = 0, half = 0;
  for (const auto& c : components(g)) {
    if (c.size() < 2) continue;
    ++comps;
    big = std::max(big, static_cast<int>(c.size()));
    half += static_cast<int>((c.size() + 1) / 2);
  }
  if (!iso.empty()) {
    if (bw && wb) return n - 1 >= k;
    if (!bw && !wb) return false;
    const int bound = half + (bw ? static_cast<int>(iso.size()) : 0);
    if (bound >= k) return true;
    return brute(p, g, k, L.trace);
  }
  if (comps >= k || big >= 2 * k || half >= k) return true;
  return brute(p, g, k, L.trace);
}

// White-to-black across edges, black-to-white across non-edges, nothing else.
bool peeling_case(const PatternGraph& p, const Graph& g0, int k, const Ladder& L) {
  L.note("no-loop/peeling");
  Graph g = g0;
  for (int u : universal_vertices(g0)) g.remove_vertex(u);
  if (g.active_count() == 0) return false;

  int removed_isolated = 0;
  Graph c = g;
  const TwinQuotient q = twin_quotient(g);
  int m = -1;
  Peeling prefix;
  for (int l = 0; l <= k; ++l) {
    auto pre = peel_by_degrees(q.graph, l);
    if (!pre) break;
    m = l;
    prefix = std::move(*pre);
  }
  if (m >= 0) {
    // A quotient vertex only stands for an isolated (universal) layer when
    // its twin class is independent (a clique); cut the prefix otherwise.
    std::vector<int> class_size(g.size(), 0);
    std::vector<char> class_clique(g.size(), 0);
    for (int v : g.vertices()) {
      ++class_size[q.rep[v]];
      if (v != q.rep[v] && g.has_edge(v, q.rep[v])) class_clique[q.rep[v]] = 1;
    }
    size_t keep = 0;
    for (size_t j = 0; j < prefix.size(); ++j) {
      const int r = prefix[j][0];
      const bool is_iso_layer = j % 2 == 0;
      const bool wrong = class_size[r] > 1 && (is_iso_layer ? class_clique[r] != 0 : class_clique[r] == 0);
      if (wrong) break;
      if (is_iso_layer) keep = j + 1;
    }
    prefix.resize(keep);
    std::vector<char> drop(g.size(), 0), iso_rep(g.size(), 0);
    for (size_t j = 0; j < prefix.size(); ++j) {
      drop[prefix[j][0]] = 1;
      if (j % 2 == 0) iso_rep[prefix[j][0]] = 1;
    }
    for (int v : g.vertices()) {
      if (!drop[q.rep[v]]) continue;
      if (iso_rep[q.rep[v]]) ++removed_isolated;
      c.remove_vertex(v);
    }
  }
  // Whatever the degree tests did not certify is peeled off directly.
  for (;;) {
    if (c.active_count() < 2) return false;
    if (removed_isolated >= k) {
      L.note("no-loop/peeling:residual-slice");
      return decide_saturation_unweighted(p, c);
    }
    for (int v : universal_vertices(c)) c.remove_vertex(v);
    if (c.active_count() < 2) return false;
    const auto layer = isolated_vertices(c);
    if (layer.empty()) break;
    removed_isolated += static_cast<int>(layer.size());
    for (int v : layer) c.remove_vertex(v);
  }
  const int kr = k - removed_isolated;
  if (c.active_count() < 2) return false;
  if (!decide_saturation_unweighted(p, c)) return false;
  if (c.active_count() / 2 >= kr) return true;
  return brute(p, c, kr, L.trace);
}

bool ladder(PatternGraph p, Graph g, int k, const Ladder& L) {
  p = normalize_pattern(p);
  const int n = g.active_count();
  if (is_edgeless(g)) {
    L.note("trivial/edgeless");
    return uniform_max_weight(p.minus, n) >= std::max(k, 0);
  }
  if (is_clique(g)) {
    L.note("trivial/clique");
    return uniform_max_weight(p.plus, n) >= std::max(k, 0);
  }
  if (k <= 0) {
    L.note("slice");
    return decide_saturation_unweighted(p, g);
  }
  const bool bb = (p.plus | p.minus) & arc_bit(Black, Black);
  const bool ww = (p.plus | p.minus) & arc_bit(White, White);
  if (bb) {
    if (!p.has_plus(Black, Black)) {
      L.note("mirror");
      std::tie(p, g) = mirror_instance(p, g);
    }
    return black_loop(p, g, k, L);
  }
  if (ww) {
    if (!p.has_plus(White, White)) {
      L.note("mirror");
      std::tie(p, g) = mirror_instance(p, g);
    }
    const bool bw_plus = p.has_plus(Black, White), bw_minus = p.has_minus(Black, White);
    if (!bw_plus && !bw_minus) {
      L.note("white-loop/all-white");
      return false;
    }
    if (bw_plus && bw_minus) {
      L.note("white-loop/one-white-edge");
      if (n - 2 >= k) return true;
      return brute(p, g, k, L.trace);
    }
    if (bw_plus) return spanning_trees(p, g, k, L);
    L.note("mirror");
    std::tie(p, g) = mirror_instance(p, g);
    return universal_and_matching(p, g, k, L);
  }
  if (p.plus == 0 && p.minus == 0) {
    L.note("empty-pattern");
    return false;
  }
  if (p.has_plus(Black, White) && p.has_plus(White, Black)) return alternating(p, g, k, L);
  if (p.has_minus(Black, White) && p.has_minus(White, Black)) {
    L.note("mirror");
    std::tie(p, g) = mirror_instance(p, g);
    return alternating(p, g, k, L);
  }
  if (p.has_plus(Black, White)) {
    L.note("mirror");
    std::tie(p, g) = mirror_instance(p, g);
  }
  assert(p.plus == arc_bit(White, Black) && p.minus == arc_bit(Black, White));
  return peeling_case(p, g, k, L);
}

}  // namespace

int max_saturation_weight(const PatternGraph& p, const Graph& g) {
  if (g.active_count() < 2) return -1;
  return class_max_weight(p, twin_classes(g));
}

namespace {

bool saturates(const PatternGraph& p, const Graph& g, const std::vector<char>& black) {
  const auto verts = g.vertices();
  for (int v : verts) {
    const int cv = black[v] ? Black : White;
    bool found = false;
    for (int w : verts)
      if (w != v && arc_ok(p, g.has_edge(v, w), cv, black[w] ? Black : White)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// Cheap candidate colourings, each verified; a miss proves nothing.
bool quick_saturation(const PatternGraph& p, const Graph& g) {
  const auto verts = g.vertices();
  std::vector<char> col(g.size(), 0);
  for (char c : {0, 1}) {
    for (int v : verts) col[v] = c;
    if (saturates(p, g, col)) return true;
  }
  // greedy maximal independent sets (and cliques) from every start vertex
  for (bool clique : {false, true})
    for (size_t start = 0; start < verts.size(); ++start) {
      std::fill(col.begin(), col.end(), 0);
      for (size_t i = 0; i < verts.size(); ++i) {
        const int v = verts[(start + i) % verts.size()];
        bool fits = true;
        for (int u : verts)
          if (col[u] && g.has_edge(u, v) != clique) fits = false;
        col[v] = fits;
      }
      if (saturates(p, g, col)) return true;
      for (int v : verts) col[v] = !col[v];
      if (saturates(p, g, col)) return true;
    }
  return false;
}

// For plus {wb} minus {bw}: isolated vertices are forced black and universal
// ones white, each peeled layer is witnessed by the next, so a saturation
// exists iff the peeled residual has two or more vertices and saturates.
Graph peel_forced_layers(Graph g) {
  for (bool changed = true; changed && g.active_count() >= 2;) {
    changed = false;
    for (const auto& layer : {isolated_vertices(g), universal_vertices(g)})
      if (!layer.empty()) {
        for (int v : layer) g.remove_vertex(v);
        changed = true;
        break;
      }
  }
  return g;
}

}  // namespace

bool decide_saturation_unweighted(const PatternGraph& p_in, const Graph& g_in) {
  PatternGraph p = normalize_pattern(p_in);
  Graph g = g_in;
  if (p == PatternGraph{BW, WB}) std::tie(p, g) = mirror_instance(p, g);
  if (p == PatternGraph{WB, BW}) g = peel_forced_layers(std::move(g));
  if (g.active_count() < 2) return false;
  if (quick_saturation(p, g)) return true;
  SatEncoding enc = encode_saturation(p, g);
  return exact_sat(enc.num_vars, enc.clauses).has_value();
}

bool solve_saturation_ge(const PatternGraph& p, const Graph& g, int k, SaturationTrace* trace) {
  if (g.kind() != GraphKind::Basic) fail(ErrorKind::Invalid, "saturation needs a basic graph");
  if (g.active_count() < 2) fail(ErrorKind::Invalid, "saturation needs at least two vertices");
  return ladder(p, g, k, Ladder{trace});
}

}  // namespace eso
