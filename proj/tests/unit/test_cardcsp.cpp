#include <doctest.h>

#include <random>

#include "eso/cardcsp.hpp"
#include "eso/error.hpp"
#include "eso/oracles.hpp"
#include "support/brute.hpp"

using namespace eso;

namespace {

CspInstance compile(const std::string& matrix, const Graph& g, int k) {
  return compile_csp(parse_formula("exists<= X . forall x . forall y . (" + matrix + ")"), g, k);
}

CspInstance no_c_pairs(int n, std::uint8_t d, int k) {
  CspInstance c;
  c.universe_size = n;
  c.c_graph = Graph(GraphKind::Basic, n);
  c.d_set = d;
  c.k = k;
  return c;
}

Graph triangle() { return brute::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("compiling configuration tables") {
  const Graph p3 = brute::from_edges(3, {{0, 1}, {1, 2}});
  CspInstance vc = compile("adj(x,y) -> (X(x) | X(y))", p3, 1);
  CHECK(vc.d_set == 0b110);  // edges
  CHECK(vc.c_set == 0b111);  // non-edges
  CHECK(vc.unary_allowed == 0b11);
  CHECK(vc.c_graph == complement_basic(p3));

  CspInstance indep = compile("!(X(x) & X(y))", p3, 1);
  CHECK(indep.c_set == 0b011);
  CHECK(indep.d_set == 0b011);
  CHECK(indep.unary_allowed == 0b01);

  CspInstance cl = compile("(X(x) & X(y)) -> adj(x,y)", p3, 1);
  CHECK(cl.d_set == 0b111);
  CHECK(cl.c_set == 0b011);
  CHECK(cl.unary_allowed == 0b01);  // false at x = y for a member: no loops

  CHECK_THROWS_AS(compile_csp(parse_formula("exists>= X . forall x . forall y . X(x)"), p3, 1), Error);
}

TEST_CASE("solver examples") {
  CHECK(solve_csp_le(no_c_pairs(4, 0b110, 3)));
  for (int k = 0; k <= 3; ++k) CHECK_FALSE(solve_csp_le(no_c_pairs(3, 0b010, k)));
  CHECK_FALSE(solve_csp_le(no_c_pairs(3, 0b100, 2)));
  const Graph tri = triangle();
  CHECK_FALSE(solve_csp_le(compile("adj(x,y) -> (X(x) | X(y))", tri, 1)));
  CHECK(solve_csp_le(compile("adj(x,y) -> (X(x) | X(y))", tri, 2)));
}

TEST_CASE("solver agrees with the reference on random instances") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 20000; ++i) {
    CspInstance c;
    c.universe_size = static_cast<int>(rng() % 9);
    c.c_graph = brute::random_basic(rng, c.universe_size, std::uniform_real_distribution<double>(0, 1)(rng));
    c.c_set = static_cast<std::uint8_t>(rng() % 8);
    c.d_set = static_cast<std::uint8_t>(rng() % 8);
    c.unary_allowed = static_cast<std::uint8_t>(rng() % 4);
    c.k = static_cast<int>(rng() % 5);
    CAPTURE(dump_csp(c));
    CHECK(solve_csp_le(c) == brute::csp_solvable(c));
  }
}

TEST_CASE("larger sparse instances stay exact") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 300; ++i) {
    CspInstance c;
    c.universe_size = 12 + static_cast<int>(rng() % 5);
    c.c_graph = brute::random_basic(rng, c.universe_size, i % 2 ? 0.1 : 0.9);
    c.c_set = static_cast<std::uint8_t>(rng() % 8);
    c.d_set = static_cast<std::uint8_t>(rng() % 8);
    c.k = static_cast<int>(rng() % 5);
    CHECK(solve_csp_le(c) == brute::csp_solvable(c));
  }
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 200; ++i) {
    CspInstance c;
    c.universe_size = static_cast<int>(rng() % 7);
    c.c_graph = brute::random_basic(rng, c.universe_size, 0.5);
    c.c_set = static_cast<std::uint8_t>(rng() % 8);
    c.d_set = static_cast<std::uint8_t>(rng() % 8);
    c.unary_allowed = static_cast<std::uint8_t>(rng() % 4);
    c.k = static_cast<int>(rng() % 4);
    const CspInstance r = parse_csp(dump_csp(c));
    CHECK(dump_csp(r) == dump_csp(c));
  }
  CHECK(format_count_set(0b101) == "{0,2}");
  CHECK_THROWS_AS(parse_csp("cset {0}\n"), Error);
  CHECK_THROWS_AS(parse_csp("csp 2 1\ncpair 0 0\n"), Error);
}

TEST_CASE("the fired case is recorded") {
  CspTrace t;
  solve_csp_le(no_c_pairs(4, 0b110, 3), &t);
  CHECK_FALSE(t.steps.empty());
}
