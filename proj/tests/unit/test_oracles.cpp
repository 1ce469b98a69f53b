#include <doctest.h>

#include <random>

#include "eso/error.hpp"
#include "eso/oracles.hpp"
#include "eso/sweeps.hpp"
#include "support/brute.hpp"

using namespace eso;

namespace {

const Formula& clique() {
  static const Formula f = parse_formula("exists>= C . forall x . forall y . ((C(x) & C(y)) -> (x=y | adj(x,y)))");
  return f;
}
const Formula& cover() {
  static const Formula f = parse_formula("exists<= C . forall x . forall y . (adj(x,y) -> (C(x) | C(y)))");
  return f;
}
const Formula& dominating() {
  static const Formula f = parse_formula("exists<= D . forall x . exists y . (D(y) & (x=y | adj(x,y)))");
  return f;
}

Graph k3() { return brute::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("model oracle examples") {
  CHECK(oracle_models(clique(), graph_structure(k3()), 3));
  CHECK_FALSE(oracle_models(clique(), graph_structure(k3()), 4));
  Graph star = brute::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(oracle_models(dominating(), graph_structure(star), 1));
}

TEST_CASE("model oracle matches direct clique, cover and domination checkers") {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n)) {
      const Structure s = graph_structure(g);
      for (int k = 0; k <= n + 1; ++k) {
        CHECK(oracle_models(clique(), s, k) == brute::has_clique_of_size_at_least(g, k));
        CHECK(oracle_models(cover(), s, k) == brute::has_vertex_cover_at_most(g, k));
        CHECK(oracle_models(dominating(), s, k) == brute::has_dominating_set_at_most(g, k));
      }
    }
}

TEST_CASE("exact-weight head") {
  const Formula f = parse_formula("exists= C . forall x . forall y . (adj(x,y) -> (C(x) | C(y)))");
  const Structure p3 = graph_structure(brute::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(oracle_models(f, p3, 0));
  CHECK(oracle_models(f, p3, 1));
  CHECK(oracle_models(f, p3, 3));
  CHECK_FALSE(oracle_models(f, p3, 4));
}

TEST_CASE("model oracle budget") {
  const Structure big = graph_structure(Graph(GraphKind::Basic, 40));
  bool budget = false;
  try {
    oracle_models(cover(), big, 3);
  } catch (const Error& e) {
    budget = e.kind() == ErrorKind::OracleBudget;
  }
  CHECK(budget);
}

TEST_CASE("saturation oracle examples") {
  const PatternGraph bb{BB, 0};
  CHECK(oracle_saturation(bb, brute::from_edges(2, {{0, 1}}), 2));
  for (int k = 0; k <= 3; ++k) CHECK_FALSE(oracle_saturation(bb, brute::from_edges(3, {{0, 1}}), k));
  const PatternGraph alt{BW | WB, 0};
  Graph p4 = brute::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(brute::saturating_weight_at_least(alt, p4, 2));
  CHECK(oracle_saturation(alt, p4, 2));
}

TEST_CASE("saturation oracle matches the reference enumeration") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 3000; ++i) {
    const Graph g = brute::random_basic(rng, 2 + static_cast<int>(rng() % 6), 0.5);
    const PatternGraph p = pattern_from_index(static_cast<int>(rng() % 256));
    const int k = static_cast<int>(rng() % 5);
    CHECK(oracle_saturation(p, g, k) == brute::saturating_weight_at_least(p, g, k));
  }
}

TEST_CASE("CSP oracle examples") {
  CspInstance a;
  a.universe_size = 4;
  a.c_graph = Graph(GraphKind::Basic, 4);
  a.d_set = 0b110;
  a.k = 3;
  CHECK(oracle_csp(a));
  CspInstance b;
  b.universe_size = 3;
  b.c_graph = Graph(GraphKind::Basic, 3);
  b.d_set = 0b100;
  b.k = 2;
  CHECK_FALSE(oracle_csp(b));
}

TEST_CASE("CSP oracle matches the reference enumeration") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 3000; ++i) {
    CspInstance c;
    c.universe_size = static_cast<int>(rng() % 8);
    c.c_graph = brute::random_basic(rng, c.universe_size, 0.5);
    c.c_set = static_cast<std::uint8_t>(rng() % 8);
    c.d_set = static_cast<std::uint8_t>(rng() % 8);
    c.unary_allowed = static_cast<std::uint8_t>(rng() % 4);
    c.k = static_cast<int>(rng() % 4);
    CHECK(oracle_csp(c) == brute::csp_solvable(c));
  }
}

TEST_CASE("WSAT oracle examples") {
  WcnfInstance w{3, {{1, 2}, {2, 3}}, 2, 1, Mode::Le};
  CHECK(oracle_wsat(w));
  w.k = 0;
  CHECK_FALSE(oracle_wsat(w));
  WcnfInstance u{3, {{1}, {-2}}, 1, 3, Mode::Eq};
  CHECK_FALSE(oracle_wsat(u));
}

TEST_CASE("WSAT oracle matches the reference enumeration") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 2000; ++i) {
    const Mode m = i % 3 == 0 ? Mode::Eq : i % 3 == 1 ? Mode::Le : Mode::Ge;
    const WcnfInstance w = brute::random_wcnf(rng, 10, 3, 5, m);
    CHECK(oracle_wsat(w) == brute::wsat(w));
  }
}
