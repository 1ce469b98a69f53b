#include <doctest.h>

#include <algorithm>
#include <random>

#include "eso/error.hpp"
#include "eso/oracles.hpp"
#include "eso/wsat.hpp"
#include "support/brute.hpp"

using namespace eso;

namespace {

std::vector<Clause> sorted(std::vector<Clause> c) { return normalize_clauses(std::move(c)); }

}  // namespace

TEST_CASE("grounding a vertex cover on a path") {
  const Formula f = parse_formula("exists<= C . forall x . forall y . (adj(x,y) -> (C(x) | C(y)))");
  const auto g = ground_formula(f, graph_structure(brute::from_edges(3, {{0, 1}, {1, 2}})), 1);
  REQUIRE(g.disjuncts.size() == 1);
  CHECK(sorted(g.disjuncts[0].clauses) == sorted({{1, 2}, {2, 3}}));
  CHECK(g.disjuncts[0].mode == Mode::Le);
}

TEST_CASE("grounding a clique on a triangle leaves no clause") {
  const Formula f = parse_formula("exists>= C . forall x . forall y . ((C(x) & C(y)) -> (x=y | adj(x,y)))");
  const auto g = ground_formula(f, graph_structure(brute::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})), 3);
  REQUIRE(g.disjuncts.size() == 1);
  CHECK(sorted(g.disjuncts[0].clauses).empty());
}

TEST_CASE("grounding splits on existential witnesses") {
  const Formula f = parse_formula("exists= S . exists y . forall x . (S(x) -> x=y)");
  const auto g = ground_formula(f, graph_structure(Graph(GraphKind::Basic, 2)), 1);
  REQUIRE(g.disjuncts.size() == 2);
  CHECK(g.witnesses == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(sorted(g.disjuncts[0].clauses) == std::vector<Clause>{{-2}});
  CHECK(sorted(g.disjuncts[1].clauses) == std::vector<Clause>{{-1}});
}

TEST_CASE("grounding rejects an a-before-e prefix") {
  const Formula f = parse_formula("exists<= D . forall x . exists y . (D(y) & (x=y | adj(x,y)))");
  CHECK_THROWS_AS(ground_formula(f, graph_structure(Graph(GraphKind::Basic, 2)), 1), Error);
}

TEST_CASE("1-WSAT examples") {
  WcnfInstance w{3, {{1}, {-2}}, 1, 2, Mode::Eq};
  CHECK(solve_1wsat(w));
  w.k = 3;
  CHECK_FALSE(solve_1wsat(w));
  for (Mode m : {Mode::Eq, Mode::Le, Mode::Ge})
    for (int k = 0; k <= 2; ++k) CHECK_FALSE(solve_1wsat(WcnfInstance{2, {{1}, {-1}}, 1, k, m}));
}

TEST_CASE("search tree examples") {
  CHECK(solve_wsat_le_searchtree(WcnfInstance{3, {{1, 2}, {2, 3}}, 2, 1, Mode::Le}));
  CHECK_FALSE(solve_wsat_le_searchtree(WcnfInstance{3, {{1, 2}, {2, 3}, {1, 3}}, 2, 1, Mode::Le}));
  CHECK(solve_wsat_le_searchtree(WcnfInstance{3, {}, 0, 0, Mode::Le}));
}

TEST_CASE("exact SAT examples") {
  auto a = exact_sat(1, {{1}});
  REQUIRE(a);
  CHECK((*a)[0] == 1);  // indexed by variable - 1
  CHECK_FALSE(exact_sat(1, {{1}, {-1}}));
  // two pigeons, one hole
  CHECK_FALSE(exact_sat(2, {{1}, {2}, {-1, -2}}));
}

TEST_CASE("exact SAT agrees with enumeration and returns models") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 2000; ++i) {
    const WcnfInstance w = brute::random_wcnf(rng, 10, 3, 0, Mode::Ge);
    const auto hist = brute::satisfying_weights(w.num_vars, w.clauses);
    const bool sat = std::any_of(hist.begin(), hist.end(), [](long long c) { return c > 0; });
    auto model = exact_sat(w.num_vars, w.clauses);
    REQUIRE(model.has_value() == sat);
    if (!model) continue;
    for (const auto& c : w.clauses)
      CHECK(std::any_of(c.begin(), c.end(), [&](int lit) { return ((*model)[std::abs(lit) - 1] == 1) == (lit > 0); }));
  }
}

TEST_CASE("solvers agree with the reference on random instances") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 3000; ++i) {
    const WcnfInstance le = brute::random_wcnf(rng, 12, 3, 4, Mode::Le);
    SearchTreeStats st;
    CHECK(solve_wsat_le_searchtree(le, &st) == brute::wsat(le));
    // each level grows by at most the clause width
    size_t bound = 1;
    for (size_t lvl = 0; lvl < st.frontier.size(); ++lvl, bound *= std::max(le.d, 1)) CHECK(st.frontier[lvl] <= bound);

    const Mode m = i % 3 == 0 ? Mode::Eq : i % 3 == 1 ? Mode::Le : Mode::Ge;
    WcnfInstance unit = brute::random_wcnf(rng, 12, 1, 6, m);
    CHECK(solve_1wsat(unit) == brute::wsat(unit));
  }
}

TEST_CASE("WCNF text round trip") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const WcnfInstance w = brute::random_wcnf(rng, 8, 3, 4, i % 2 ? Mode::Le : Mode::Eq);
    const WcnfInstance r = parse_wcnf(dump_wcnf(w));
    CHECK(r.num_vars == w.num_vars);
    CHECK(r.k == w.k);
    CHECK(r.d == w.d);
    CHECK(r.mode == w.mode);
    CHECK(r.clauses == normalize_clauses(w.clauses));
  }
  CHECK_THROWS_AS(parse_wcnf("wcnf 2 le 1\n1 0\n"), Error);
}

TEST_CASE("clause normalisation") {
  CHECK(normalize_clauses({{2, 1, 2}, {1, -1}, {1, 2}}) == std::vector<Clause>{{1, 2}});
}

TEST_CASE("restriction fixes variables") {
  WcnfInstance w{3, {{1, 2}, {-1, 3}}, 2, 1, Mode::Le};
  const WcnfInstance r = restrict_instance(w, {{1, true}});
  CHECK(brute::wsat(r) == brute::wsat(WcnfInstance{3, {{1}, {3}}, 1, 1, Mode::Le}));
}
