#include "eso/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "eso/error.hpp"

namespace eso {

int MatchedReachInstance::endpoint_of_s() const {
  int v = s;
  for (const auto& m : matchings) v = m[v];
  return v;
}

void validate(const MatchedReachInstance& m) {
  if (m.width < 1 || m.layers < 1) fail(ErrorKind::Invalid, "matched-reach needs width >= 1 and layers >= 1");
  if (static_cast<int>(m.matchings.size()) != m.layers - 1)
    fail(ErrorKind::Invalid, "matched-reach needs layers - 1 matchings");
  for (const auto& perm : m.matchings) {
    std::vector<char> seen(m.width, 0);
    if (static_cast<int>(perm.size()) != m.width) fail(ErrorKind::Invalid, "matching has the wrong length");
    for (int x : perm) {
      if (x < 0 || x >= m.width || seen[x]) fail(ErrorKind::Invalid, "matching is not a permutation");
      seen[x] = 1;
    }
  }
  if (m.s < 0 || m.s >= m.width || m.t < 0 || m.t >= m.width) fail(ErrorKind::Invalid, "s or t out of range");
}

MatchedReachInstance gen_matched_reach(int width, int layers, std::uint64_t seed, ReachTarget target) {
  if (layers < 1 || width < 1) fail(ErrorKind::Invalid, "matched-reach needs width >= 1 and layers >= 1");
  if (target == ReachTarget::No && width < 2) fail(ErrorKind::Invalid, "a no-instance needs width >= 2");
  std::mt19937_64 rng(seed);
  MatchedReachInstance m;
  m.width = width;
  m.layers = layers;
  for (int j = 0; j + 1 < layers; ++j) {
    std::vector<int> perm(width);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    m.matchings.push_back(std::move(perm));
  }
  m.s = static_cast<int>(rng() % width);
  const int end = m.endpoint_of_s();
  m.t = target == ReachTarget::Yes ? end : (end + 1 + static_cast<int>(rng() % (width - 1))) % width;
  return m;
}

MatchedReachInstance parse_mreach(const std::string& text) {
  std::istringstream in(text);
  std::string line, word;
  MatchedReachInstance m;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    if (!header) {
      if (!(ls >> word)) continue;
      if (word != "mreach" || !(ls >> m.width >> m.layers >> m.s >> m.t))
        fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'mreach <n> <k> <s> <t>'");
      --m.s;
      --m.t;
      header = true;
      continue;
    }
    std::vector<int> perm;
    int x;
    while (ls >> x) perm.push_back(x - 1);
    if (!ls.eof()) fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected integers");
    if (!perm.empty()) m.matchings.push_back(std::move(perm));
  }
  if (!header) fail(ErrorKind::Parse, "missing 'mreach' header");
  try {
    validate(m);
  } catch (const Error& e) {
    fail(ErrorKind::Parse, e.what());
  }
  return m;
}

std::string dump_mreach(const MatchedReachInstance& m) {
  std::ostringstream out;
  out << "mreach " << m.width << ' ' << m.layers << ' ' << m.s + 1 << ' ' << m.t + 1 << '\n';
  for (const auto& perm : m.matchings) {
    for (size_t i = 0; i < perm.size(); ++i) out << (i ? " " : "") << perm[i] + 1;
    out << '\n';
  }
  return out.str();
}

namespace {

// Undirected layered graph with `extra` spare vertices after the layers.
Graph layered(const MatchedReachInstance& m, GraphKind kind, int extra_layers, int extra) {
  Graph g(kind, m.width * (m.layers + extra_layers) + extra);
  for (int j = 0; j + 1 < m.layers; ++j)
    for (int i = 0; i < m.width; ++i) g.add_edge(m.vertex(i, j), m.vertex(m.matchings[j][i], j + 1));
  return g;
}

}  // namespace

ReducedInstance reduce_reach_aa(const MatchedReachInstance& m) {
  validate(m);
  Graph g = layered(m, GraphKind::Undirected, 1, 0);
  for (int i = 0; i < m.width; ++i)
    if (i != m.t) g.add_edge(m.vertex(i, m.layers - 1), m.vertex(i, m.layers));
  g.add_edge(m.vertex(m.s, 0), m.vertex(m.s, 0));
  return {std::move(g), m.layers};
}

ReducedInstance reduce_reach_aaa(const MatchedReachInstance& m) {
  validate(m);
  const int base = m.width * m.layers;
  Graph g = layered(m, GraphKind::Basic, 0, 4);
  auto triangle = [&](int v, int a, int b) {
    g.add_edge(v, a);
    g.add_edge(v, b);
    g.add_edge(a, b);
  };
  triangle(m.vertex(m.s, 0), base, base + 1);
  triangle(m.vertex(m.t, m.layers - 1), base + 2, base + 3);
  return {std::move(g), m.layers + 4};
}

ReducedInstance reduce_reach_eaa(const MatchedReachInstance& m) {
  validate(m);
  if (m.layers == 1) {
    // Every layer vertex is isolated, so the hub gadget cannot separate the
    // cases; emit a fixed instance with the right answer instead.
    if (m.s == m.t) return {Graph(GraphKind::Basic, 1), 1};
    Graph g(GraphKind::Basic, 2);
    g.add_edge(0, 1);
    return {std::move(g), 1};
  }
  const int hub = m.width * m.layers;
  Graph g = layered(m, GraphKind::Basic, 0, 1);
  const int s = m.vertex(m.s, 0), t = m.vertex(m.t, m.layers - 1);
  for (int v = 0; v < hub; ++v)
    if (g.degree(v) == 1 && v != s && v != t) g.add_edge(v, hub);
  return {std::move(g), m.layers};
}

const char* const kThreeColoringText =
    "exists R . exists G . exists B . forall x . forall y . "
    "((R(x) | G(x) | B(x)) & (adj(x,y) -> (!(R(x) & R(y)) & !(G(x) & G(y)) & !(B(x) & B(y)))))";

const std::map<std::string, LibraryEntry>& formula_library() {
  static const std::map<std::string, LibraryEntry> lib = [] {
    const std::pair<const char*, const char*> texts[] = {
        {"clique", "exists>= C . forall x . forall y . ((C(x) & C(y)) -> (x=y | adj(x,y)))"},
        {"vertex-cover", "exists<= C . forall x . forall y . (adj(x,y) -> (C(x) | C(y)))"},
        {"dominating-set", "exists<= D . forall x . exists y . (D(y) & (x=y | adj(x,y)))"},
        {"reach-aa", "exists<= S . forall x . forall y . ((adj(x,x) -> S(x)) & ((S(x) & adj(x,y)) -> S(y)))"},
        {"reach-aaa",
         "exists<= S . forall x . forall y . forall z . "
         "(((adj(x,y) & adj(y,z) & adj(x,z)) -> S(x)) & ((S(x) & adj(x,y)) -> S(y)))"},
        {"reach-eaa", "exists<= S . exists z . forall x . forall y . (S(z) & ((S(x) & adj(x,y)) -> S(y)))"},
        // route coverage beyond the classical problems
        {"closed-neighbourhood", "exists>= C . exists z . forall x . (C(x) -> (x=z | adj(z,x)))"},
        {"neighbourhood-subset", "exists= C . exists z . forall x . (C(x) -> adj(z,x))"},
        {"alternating-witness",
         "exists>= C . forall x . exists y . (!(x=y) & ((C(x) & !C(y) & adj(x,y)) | (!C(x) & C(y) & !adj(x,y))))"},
    };
    std::map<std::string, LibraryEntry> out;
    for (auto [name, text] : texts) out.emplace(name, LibraryEntry{name, text, parse_formula(text)});
    return out;
  }();
  return lib;
}

}  // namespace eso
