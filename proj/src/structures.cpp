#include "eso/structures.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "eso/error.hpp"

namespace eso {

int Structure::arity_of(const std::string& name) const {
  for (const auto& [n, a] : signature)
    if (n == name) return a;
  return -1;
}

bool Structure::holds(const std::string& name, const Tuple& t) const {
  auto it = relations.find(name);
  return it != relations.end() && it->second.count(t) > 0;
}

const char* to_string(GraphKind k) {
  switch (k) {
    case GraphKind::Directed: return "digraph";
    case GraphKind::Undirected: return "undirected";
    case GraphKind::Basic: return "basic";
  }
  return "?";
}

Graph::Graph(GraphKind kind, int n)
    : kind_(kind), n_(n), adj_(static_cast<size_t>(n) * n, 0), active_(n, 1) {}

int Graph::active_count() const {
  return static_cast<int>(std::count(active_.begin(), active_.end(), 1));
}

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (active_[v]) out.push_back(v);
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) fail(ErrorKind::Invalid, "edge endpoint out of range");
  if (kind_ == GraphKind::Basic && u == v) fail(ErrorKind::Invalid, "self-loop in basic graph");
  adj_[u * n_ + v] = 1;
  if (kind_ != GraphKind::Directed) adj_[v * n_ + u] = 1;
}

void Graph::remove_edge(int u, int v) {
  adj_[u * n_ + v] = 0;
  if (kind_ != GraphKind::Directed) adj_[v * n_ + u] = 0;
}

void Graph::remove_vertex(int v) {
  active_[v] = 0;
  for (int u = 0; u < n_; ++u) adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (u != v && active_[u] && has_edge(v, u)) out.push_back(u);
  return out;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && active_[u] && has_edge(v, u)) ++d;
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = (kind_ == GraphKind::Directed ? 0 : u); v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

GraphKind Graph::detect_kind() const {
  bool loops = false;
  for (int u = 0; u < n_; ++u) {
    if (has_edge(u, u)) loops = true;
    for (int v = 0; v < n_; ++v)
      if (has_edge(u, v) != has_edge(v, u)) return GraphKind::Directed;
  }
  return loops ? GraphKind::Undirected : GraphKind::Basic;
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

int parse_int(const std::string& w, int line_no) {
  try {
    size_t pos = 0;
    int v = std::stoi(w, &pos);
    if (pos != w.size() || v < 0) throw std::invalid_argument(w);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + w + "'");
  }
}

}  // namespace

Structure load_structure(const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
      auto words = split_words(raw);
      if (!words.empty()) lines.emplace_back(no, std::move(words));
    }
  }
  if (lines.empty()) fail(ErrorKind::Parse, "empty structure file");

  auto err = [](int no, const std::string& msg) {
    fail(ErrorKind::Parse, "line " + std::to_string(no) + ": " + msg);
  };
  Structure s;
  const auto& head = lines[0].second;
  if (head[0] == "graph") {
    if (head.size() != 3) err(lines[0].first, "expected 'graph <kind> <n>'");
    const std::string& kind = head[1];
    if (kind != "basic" && kind != "undirected" && kind != "digraph") err(lines[0].first, "unknown graph kind '" + kind + "'");
    s.universe_size = parse_int(head[2], lines[0].first);
    s.signature = {{"adj", 2}};
    auto& rel = s.relations["adj"];
    for (size_t i = 1; i < lines.size(); ++i) {
      const auto& [no, w] = lines[i];
      if (w[0] != "edge" || w.size() != 3) err(no, "expected 'edge <u> <v>'");
      int u = parse_int(w[1], no), v = parse_int(w[2], no);
      if (u >= s.universe_size || v >= s.universe_size) err(no, "element index out of range");
      if (kind == "basic" && u == v) err(no, "self-loop in basic graph");
      rel.insert({u, v});
      if (kind != "digraph") rel.insert({v, u});
    }
    return s;
  }
  if (head[0] != "structure" || head.size() != 1) err(lines[0].first, "expected 'graph' or 'structure' header");
  size_t i = 1;
  if (i >= lines.size() || lines[i].second[0] != "universe" || lines[i].second.size() != 2)
    err(i < lines.size() ? lines[i].first : lines.back().first, "expected 'universe <n>'");
  s.universe_size = parse_int(lines[i].second[1], lines[i].first);
  ++i;
  std::set<Tuple>* current = nullptr;
  int arity = 0;
  bool ended = false;
  for (; i < lines.size(); ++i) {
    const auto& [no, w] = lines[i];
    if (ended) err(no, "content after 'end'");
    if (w[0] == "end") {
      if (w.size() != 1) err(no, "unexpected tokens after 'end'");
      ended = true;
    } else if (w[0] == "relation") {
      if (w.size() != 3) err(no, "expected 'relation <name> <arity>'");
      if (s.arity_of(w[1]) >= 0) err(no, "duplicate relation '" + w[1] + "'");
      arity = parse_int(w[2], no);
      s.signature.emplace_back(w[1], arity);
      current = &s.relations[w[1]];
    } else {
      if (!current) err(no, "tuple before any relation block");
      if (static_cast<int>(w.size()) != arity)
        err(no, "arity mismatch: expected " + std::to_string(arity) + " entries, got " + std::to_string(w.size()));
      Tuple t;
      for (const auto& x : w) {
        int e = parse_int(x, no);
        if (e >= s.universe_size) err(no, "element index out of range");
        t.push_back(e);
      }
      current->insert(std::move(t));
    }
  }
  if (!ended) err(lines.back().first, "missing 'end'");
  return s;
}

std::string dump_graph(const Graph& g) {
  Graph c = induced_copy(g);
  std::ostringstream out;
  out << "graph " << to_string(c.kind()) << ' ' << c.size() << '\n';
  for (auto [u, v] : c.edges()) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

Structure graph_structure(const Graph& g) {
  Graph c = induced_copy(g);
  Structure s;
  s.universe_size = c.size();
  s.signature = {{"adj", 2}};
  auto& rel = s.relations["adj"];
  for (int u = 0; u < c.size(); ++u)
    for (int v = 0; v < c.size(); ++v)
      if (c.has_edge(u, v)) rel.insert({u, v});
  return s;
}

Graph graph_view(const Structure& s) {
  if (s.signature.size() != 1 || s.signature[0].second != 2)
    fail(ErrorKind::Invalid, "graph view needs a single binary relation");
  Graph g(GraphKind::Directed, s.universe_size);
  for (const auto& t : s.relations.at(s.signature[0].first)) g.add_edge(t[0], t[1]);
  GraphKind k = g.detect_kind();
  Graph out(k, s.universe_size);
  for (const auto& t : s.relations.at(s.signature[0].first)) out.add_edge(t[0], t[1]);
  return out;
}

Graph complement_basic(const Graph& g) {
  if (g.kind() != GraphKind::Basic) fail(ErrorKind::Invalid, "complement needs a basic graph");
  Graph out(GraphKind::Basic, g.size());
  for (int v = 0; v < g.size(); ++v)
    if (!g.active(v)) out.remove_vertex(v);
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.active(u) && g.active(v) && !g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

bool are_twins(const Graph& g, int u, int v) {
  for (int w = 0; w < g.size(); ++w) {
    if (w == u || w == v || !g.active(w)) continue;
    if (g.has_edge(u, w) != g.has_edge(v, w)) return false;
  }
  return true;
}

TwinQuotient twin_quotient(const Graph& g) {
  if (g.kind() != GraphKind::Basic) fail(ErrorKind::Invalid, "twin quotient needs a basic graph");
  TwinQuotient q{g, std::vector<int>(g.size(), -1)};
  for (int v = 0; v < g.size(); ++v) {
    if (!g.active(v)) continue;
    for (int u = 0; u <= v; ++u) {
      if (g.active(u) && (u == v || are_twins(g, u, v))) {
        q.rep[v] = u;
        break;
      }
    }
  }
  for (int v = 0; v < g.size(); ++v)
    if (q.rep[v] >= 0 && q.rep[v] != v) q.graph.remove_vertex(v);
  return q;
}

Peeling peel_naive(const Graph& g) {
  if (g.kind() != GraphKind::Basic) fail(ErrorKind::Invalid, "peeling needs a basic graph");
  Graph h = g;
  for (int v : h.vertices())
    if (h.universal(v) && h.active_count() > 1) fail(ErrorKind::Invalid, "peeling input has a universal vertex");
  Peeling out;
  bool want_isolated = true;
  while (h.active_count() > 0) {
    std::vector<int> layer;
    for (int v : h.vertices())
      if (want_isolated ? h.isolated(v) : h.universal(v)) layer.push_back(v);
    if (layer.empty()) break;
    for (int v : layer) h.remove_vertex(v);
    out.push_back(std::move(layer));
    want_isolated = !want_isolated;
  }
  return out;
}

Graph apply_peeling(const Graph& g, const Peeling& p) {
  Graph h = g;
  for (const auto& layer : p)
    for (int v : layer) h.remove_vertex(v);
  return h;
}

std::optional<Peeling> peel_by_degrees(const Graph& q, int l) {
  const auto verts = q.vertices();
  std::vector<int> deg(q.size(), -1);
  for (int v : verts) deg[v] = q.degree(v);

  std::vector<int> iso(l + 1, -1), uni(l + 1, -1);
  for (int j = 0; j <= l; ++j) {
    int found = 0;
    for (int v : verts)
      if (deg[v] == j) {
        iso[j] = v;
        ++found;
      }
    if (found != 1) return std::nullopt;
  }
  for (int j = 1; j <= l; ++j) {
    int found = 0;
    for (int v : verts)
      if (q.has_edge(v, iso[j]) && !q.has_edge(v, iso[j - 1])) {
        uni[j] = v;
        ++found;
      }
    if (found != 1) return std::nullopt;
  }
  for (int j = 0; j <= l; ++j) {
    for (int v : verts) {
      bool want = false;
      for (int t = 1; t <= j; ++t) want = want || v == uni[t];
      if (q.has_edge(iso[j], v) != want) return std::nullopt;
    }
  }
  for (int j = 1; j <= l; ++j) {
    for (int v : verts) {
      if (v == uni[j]) continue;
      bool excluded = false;
      for (int t = 0; t < j; ++t) excluded = excluded || v == iso[t];
      if (q.has_edge(uni[j], v) == excluded) return std::nullopt;
    }
  }
  Peeling out;
  out.push_back({iso[0]});
  for (int j = 1; j <= l; ++j) {
    out.push_back({uni[j]});
    out.push_back({iso[j]});
  }
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> seen(g.size(), 0);
  std::vector<std::vector<int>> out;
  for (int s : g.vertices()) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> bfs_tree(const Graph& g, int root) {
  std::vector<int> parent(g.size(), -1), seen(g.size(), 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        queue.push_back(u);
      }
  }
  return parent;
}

std::vector<int> bfs_distances(const Graph& g, int root) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

std::vector<std::pair<int, int>> greedy_matching(const Graph& g) {
  std::vector<int> used(g.size(), 0);
  std::vector<std::pair<int, int>> out;
  for (int u : g.vertices()) {
    if (used[u]) continue;
    for (int v : g.neighbors(u))
      if (!used[v]) {
        used[u] = used[v] = 1;
        out.emplace_back(u, v);
        break;
      }
  }
  return out;
}

Graph induced_copy(const Graph& g) {
  auto verts = g.vertices();
  Graph out(g.kind(), static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = 0; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

}  // namespace eso
