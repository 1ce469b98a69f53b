#include <doctest.h>

#include <random>

#include "eso/error.hpp"
#include "eso/structures.hpp"
#include "support/brute.hpp"

using namespace eso;

namespace {

Graph load_graph(const std::string& text) { return graph_view(load_structure(text)); }

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("graph file loads as a basic path") {
  Graph g = load_graph("graph basic 3\nedge 0 1\nedge 1 2\n");
  CHECK(g.kind() == GraphKind::Basic);
  CHECK(g.size() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("relation block with one self-loop is a digraph") {
  Structure s = load_structure("structure\nuniverse 2\nrelation adj 2\n0 0\nend\n");
  CHECK(s.universe_size == 2);
  CHECK(s.holds("adj", {0, 0}));
  // a loop without any other pair is symmetric, so the view is undirected
  CHECK(graph_view(s).kind() == GraphKind::Undirected);
}

TEST_CASE("malformed input is a parse error") {
  CHECK(throws_kind([] { load_structure("structure\nuniverse 2\nrelation adj 2\n0 1 1\nend\n"); }, ErrorKind::Parse));
  CHECK(throws_kind([] { load_structure("structure\nuniverse 2\nrelation adj 2\n0 1\n"); }, ErrorKind::Parse));
  CHECK(throws_kind([] { load_structure("graph basic 2\nedge 0 5\n"); }, ErrorKind::Parse));
  CHECK(throws_kind([] { load_structure(""); }, ErrorKind::Parse));
}

TEST_CASE("graph kind detection") {
  CHECK(load_graph("structure\nuniverse 2\nrelation adj 2\n0 1\n1 0\nend\n").kind() == GraphKind::Basic);
  CHECK(load_graph("structure\nuniverse 2\nrelation adj 2\n0 0\n0 1\n1 0\nend\n").kind() == GraphKind::Undirected);
  CHECK(load_graph("structure\nuniverse 2\nrelation adj 2\n0 1\nend\n").kind() == GraphKind::Directed);
}

TEST_CASE("dump and reload round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Graph g = brute::random_basic(rng, static_cast<int>(rng() % 9), 0.4);
    CHECK(load_graph(dump_graph(g)) == g);
  }
}

TEST_CASE("complement") {
  CHECK(complement_basic(brute::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})).edges().empty());
  CHECK(complement_basic(Graph(GraphKind::Basic, 2)).edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(complement_basic(brute::from_edges(3, {{0, 1}, {1, 2}})).edges() == std::vector<std::pair<int, int>>{{0, 2}});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Graph g = brute::random_basic(rng, 7, 0.5);
    CHECK(complement_basic(complement_basic(g)) == g);
  }
}

TEST_CASE("twin quotient examples") {
  Graph k23 = brute::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  auto q = twin_quotient(k23);
  CHECK(q.graph.active_count() == 2);
  CHECK(q.graph.edges().size() == 1);

  auto tri = twin_quotient(brute::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(tri.graph.active_count() == 1);

  Graph p4 = brute::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(twin_quotient(p4).graph == p4);
}

TEST_CASE("twin quotient has no twins and representatives are twins") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Graph g = brute::random_basic(rng, 1 + static_cast<int>(rng() % 8), 0.5);
    auto q = twin_quotient(g);
    for (int v : g.vertices()) CHECK(are_twins(g, v, q.rep[v]));
    auto reps = q.graph.vertices();
    for (size_t a = 0; a < reps.size(); ++a)
      for (size_t b = a + 1; b < reps.size(); ++b) CHECK_FALSE(are_twins(g, reps[a], reps[b]));
  }
}

TEST_CASE("naive peeling examples") {
  Graph g = brute::from_edges(3, {{1, 2}});
  CHECK(peel_naive(g) == Peeling{{0}, {1, 2}});
  CHECK(apply_peeling(g, peel_naive(g)).active_count() == 0);

  Graph c4 = brute::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(peel_naive(c4).empty());

  Graph p3 = brute::from_edges(3, {{0, 1}, {1, 2}});
  p3.remove_vertex(1);
  CHECK(peel_naive(p3) == Peeling{{0, 2}});
}

TEST_CASE("peeling by degrees examples") {
  // u and v are true twins, so the quotient holds two isolated vertices and
  // the degree-0 class is not a singleton; the unreduced graph peels fine.
  Graph iso_edge = brute::from_edges(3, {{1, 2}});
  CHECK_FALSE(peel_by_degrees(twin_quotient(iso_edge).graph, 0));
  auto p = peel_by_degrees(iso_edge, 0);
  REQUIRE(p);
  CHECK(*p == Peeling{{0}});

  Graph c4 = brute::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_FALSE(peel_by_degrees(twin_quotient(c4).graph, 0));

  // i0 isolated, u1 joined to all but i0, i1 joined only to u1, then a C4-free core
  Graph g = brute::from_edges(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {3, 4}, {4, 5}});
  auto d = peel_by_degrees(twin_quotient(g).graph, 1);
  REQUIRE(d);
  CHECK(*d == Peeling{{0}, {1}, {2}});
  Peeling naive = peel_naive(g);
  REQUIRE(naive.size() >= 3);
  CHECK(naive[0] == (*d)[0]);
  CHECK(naive[1] == (*d)[1]);
  CHECK(naive[2] == (*d)[2]);
}

TEST_CASE("degree peeling agrees with naive peeling on the quotient") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    Graph g = brute::random_basic(rng, 2 + static_cast<int>(rng() % 7), 0.5);
    Graph q = twin_quotient(g).graph;
    bool has_universal = false;
    for (int v : q.vertices()) has_universal = has_universal || (q.universal(v) && q.active_count() > 1);
    if (has_universal) continue;
    const Peeling naive = peel_naive(q);
    for (int l = 0; l <= 3; ++l) {
      auto d = peel_by_degrees(q, l);
      if (!d) continue;
      ++checked;
      REQUIRE(naive.size() >= d->size());
      for (size_t j = 0; j < d->size(); ++j) CHECK(naive[j] == (*d)[j]);
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("basic graphs reject self-loops") {
  Graph g(GraphKind::Basic, 2);
  CHECK(throws_kind([&] { g.add_edge(1, 1); }, ErrorKind::Invalid));
}
