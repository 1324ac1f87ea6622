#include <catch_amalgamated.hpp>

#include "wcage/constructions.hpp"
#include "wcage/extension.hpp"
#include "wcage/factorization.hpp"
#include "wcage/search.hpp"
#include "wcage/split.hpp"

using namespace wcage;

namespace {

bool has_triangle(const Graph& g, int x, int y, int z) { return g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z); }

}  // namespace

// ---------------------------------------------------------------- factorizations

TEST_CASE("2-factorization of K_n", "[factorization]") {
  auto f5 = two_factorization(5);
  REQUIRE(f5.factors.size() == 2);
  CHECK(f5.factors[0] == cages::cycle(5));
  CHECK(has_triangle(f5.union_of(0, 1), 0, 1, 2));
  auto f7 = two_factorization(7);
  CHECK(f7.factors.size() == 3);
  CHECK(f7.union_of(0, 2).edge_count() == 21);
  CHECK(is_valid_factorization(f7));
  CHECK_THROWS(two_factorization(6));
  CHECK_THROWS(two_factorization(3));
}

TEST_CASE("1-factorization of K_n", "[factorization]") {
  auto f4 = one_factorization(4);
  REQUIRE(f4.factors.size() == 3);
  for (const auto& m : f4.factors) CHECK(m.edge_count() == 2);
  auto f6 = one_factorization(6);
  const int star = 5;
  CHECK(has_triangle(f6.union_of(0, 2), star, 0, 2));
  auto f8 = one_factorization(8);
  CHECK(f8.factors.size() == 7);
  CHECK(is_valid_factorization(f8));
  CHECK_THROWS(one_factorization(5));
  CHECK_THROWS(one_factorization(2));
}

TEST_CASE("1-factorization of K_{m,m}", "[factorization]") {
  auto f3 = one_factorization_bipartite(3);
  REQUIRE(f3.factors.size() == 3);
  for (const auto& m : f3.factors) CHECK(m.edge_count() == 3);
  auto f4 = one_factorization_bipartite(4);
  Graph u = f4.union_of(0, 2);
  const int x0 = 0, x1 = 1, y1 = 4 + 1, y2 = 4 + 2;
  CHECK((u.has_edge(x0, y1) && u.has_edge(y1, x1) && u.has_edge(x1, y2) && u.has_edge(y2, x0)));
  auto f5 = one_factorization_bipartite(5);
  Graph three = f5.union_of(0, 2);
  CHECK(three.is_regular(3));
  CHECK(girth(three) == 4);
  CHECK_THROWS(one_factorization_bipartite(2));
}

// ---------------------------------------------------------------- extension

TEST_CASE("extension lemma: the two steps of the wcycle pipeline", "[extend]") {
  // One light edge and an isolated vertex; d = 1 leaves defect 1.
  Graph x0(3);
  x0.add_edge(0, 1);
  CHECK(defect(x0, 1) == 1);
  auto z1 = extend(x0, 1, cages::complete(2));
  CHECK(z1.z.order() == 6);
  CHECK(z1.z.edge_count() == 3);
  CHECK(z1.z.is_regular(1));
  CHECK(semidirect_violations(z1, 1).empty());

  // Two heavy paths of length 2 (degree sum 8 on 6 vertices); d = 2.
  Graph x1(6);
  x1.add_edge(0, 2);
  x1.add_edge(1, 2);
  x1.add_edge(3, 5);
  x1.add_edge(4, 5);
  CHECK(defect(x1, 2) == 4);
  auto z2 = extend(x1, 2, cages::complete(5));
  CHECK(z2.z.order() == 30);
  CHECK(z2.z.is_regular(2));
  CHECK(semidirect_violations(z2, 2).empty());
}

TEST_CASE("extension of a regular graph is the graph itself", "[extend]") {
  Graph c = cages::cycle(7);
  auto z = extend(c, 2, Graph(1));
  CHECK(z.z == c);
}

TEST_CASE("extension rejects bad inputs", "[extend]") {
  Graph x(3);
  x.add_edge(0, 1);
  x.add_edge(1, 2);
  CHECK_THROWS_AS(extend(x, 1, cages::complete(2)), std::invalid_argument);
  CHECK_THROWS_AS(extend(x, 2, cages::complete(4)), std::invalid_argument);
  CHECK(extend(x, 2, cages::complete(3)).z.is_regular(2));
}

// ---------------------------------------------------------------- generic builders

TEST_CASE("wcycle pipeline", "[thm]") {
  auto c = build_thm_construction({1, 2, 5});
  CHECK(c.graph.order() == 30);
  CHECK(verify_witness(c.graph, {1, 2, 5}));

  auto c5 = build_thm_construction({2, 0, 5});
  CHECK(c5.graph.order() == 5);
  CHECK(c5.graph.light() == cages::cycle(5));

  auto c6 = build_thm_construction({2, 1, 6});
  CHECK(verify_witness(c6.graph, {2, 1, 6}));
  CHECK(c6.graph.order() >= 8);

  CHECK_THROWS(build_thm_construction({1, 1, 5}));
}

TEST_CASE("wcycle pipeline gives exact girth across small parameters", "[thm]") {
  BuildOptions opt;
  opt.max_order = 2000;
  for (int g = 3; g <= 8; ++g)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        Params p{a, b, g};
        if (!wcycle_exists(p)) continue;
        try {
          auto c = build_thm_construction(p, opt);
          INFO(to_string(p));
          CHECK(wgirth(c.graph) == g);
          CHECK(is_biregular(c.graph, a, b));
        } catch (const UnsupportedParameters&) {
        }
      }
}

TEST_CASE("cage-based upper bounds", "[bounds]") {
  auto c4 = upper_bound_builders({1, 1, 6});
  REQUIRE(c4.builds.size() == 1);
  CHECK(c4.builds[0].case_tag == "case4");
  CHECK(c4.builds[0].graph.order() == 4);

  auto c3 = upper_bound_builders({3, 1, 5});
  bool saw = false;
  for (const auto& b : c3.builds)
    if (b.case_tag == "case3") {
      saw = true;
      CHECK(b.graph.order() == 20);
      CHECK(verify_witness(b.graph, {3, 1, 5}));
    }
  CHECK(saw);

  auto c1 = upper_bound_builders({2, 1, 3});
  REQUIRE(!c1.builds.empty());
  CHECK(c1.builds[0].case_tag == "case1");
  CHECK(c1.builds[0].graph.order() == 12);  // n(2,3) * tilde n(3,2)

  auto c2 = upper_bound_builders({1, 3, 8});
  for (const auto& b : c2.builds) CHECK(verify_witness(b.graph, {1, 3, 8}));
}

// ---------------------------------------------------------------- girth 3 and 4

TEST_CASE("girth 3 examples", "[g3]") {
  CHECK(construct_g3(2, 1)->graph.order() == 6);
  CHECK(construct_g3(3, 3)->graph.order() == 8);
  CHECK(construct_g3(4, 2)->graph.order() == 7);
  CHECK_FALSE(construct_g3(1, 5));
}

TEST_CASE("girth 3 sweep", "[g3]") {
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b) {
      auto c = construct_g3(a, b);
      INFO("a=" << a << " b=" << b);
      if (a < 2) {
        CHECK_FALSE(c);
        continue;
      }
      REQUIRE(c);
      CHECK(verify_witness(c->graph, {a, b, 3}));
      CHECK(c->graph.order() == g3_value(a, b).value());
    }
}

TEST_CASE("girth 4 examples", "[g4]") {
  CHECK(construct_g4(3, 2)->graph.order() == 6);
  CHECK(construct_g4(3, 1)->graph.order() == 8);
  CHECK(construct_g4(4, 4)->graph.order() == 10);
  CHECK(construct_g4(4, 7)->graph.order() == 12);
  CHECK_FALSE(construct_g4(1, 3));
}

TEST_CASE("girth 4 sweep", "[g4]") {
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b) {
      auto c = construct_g4(a, b);
      INFO("a=" << a << " b=" << b);
      if (a < 2) {
        CHECK_FALSE(c);
        continue;
      }
      REQUIRE(c);
      CHECK(verify_witness(c->graph, {a, b, 4}));
      CHECK(c->graph.order() == g4_value(a, b).value());
    }
}

TEST_CASE("a-regular graphs of girth 4", "[g4]") {
  CHECK_FALSE(a_regular_girth4(4, 9));
  auto g10 = a_regular_girth4(4, 10);
  REQUIRE(g10);
  CHECK(g10->is_regular(4));
  CHECK(girth(*g10) == 4);
  auto k33 = a_regular_girth4(3, 6);
  REQUIRE(k33);
  CHECK(*k33 == cages::complete_bipartite(3));
  CHECK_THROWS(a_regular_girth4(2, 6));
}

TEST_CASE("a-regular girth-4 existence agrees with exhaustive search", "[g4][search]") {
  SearchConfig cfg;
  for (int a = 3; a <= 4; ++a)
    for (int n = a + 1; n <= 12; ++n) {
      auto built = a_regular_girth4(a, n);
      if (built) {
        CHECK(built->order() == n);
        CHECK(built->is_regular(a));
        CHECK(girth(*built) == 4);
      }
      auto s = exists_wgraph({a, 0, 4}, n, cfg);
      INFO("a=" << a << " n=" << n);
      REQUIRE(s.status != OrderStatus::budget_exceeded);
      CHECK(built.has_value() == (s.status == OrderStatus::found));
    }
}

// ---------------------------------------------------------------- girth 5 and 6

TEST_CASE("girth 5/6 examples", "[g56]") {
  CHECK(construct_g56(1, 4, 5).graph.order() == 6);
  CHECK(construct_g56(1, 5, 5).graph.order() == 8);
  CHECK(construct_g56(2, 3, 5).graph.order() == 8);
  CHECK(construct_g56(2, 3, 6).graph.order() == 12);
  CHECK_THROWS(construct_g56(3, 1, 5));
  CHECK_THROWS(construct_g56(1, 1, 5));
}

TEST_CASE("girth 5/6 sweep", "[g56]") {
  for (int g = 5; g <= 6; ++g)
    for (int a = 1; a <= 2; ++a)
      for (int b = 0; b <= 12; ++b) {
        auto v = g56_value(a, b, g);
        if (!v) continue;
        auto c = construct_g56(a, b, g);
        INFO("a=" << a << " b=" << b << " g=" << g);
        CHECK(verify_witness(c.graph, {a, b, g}));
        CHECK(c.graph.order() == *v);
      }
}

// ---------------------------------------------------------------- splitting

TEST_CASE("splitting cages", "[split]") {
  auto petersen = cages::petersen();
  auto pm = find_factor(petersen, 1);
  REQUIRE(pm.factor);
  auto s = split_cage(petersen, *pm.factor);
  CHECK(s.a == 1);
  CHECK(s.b == 2);
  CHECK(s.girth == 8);
  CHECK(s.graph.order() == 10);

  auto heawood = split_catalog_cage(3, 6, 2, 7);
  REQUIRE(heawood);
  CHECK(heawood->split.graph.order() == 14);

  FactorOptions ham;
  ham.hamiltonian = true;
  auto tc = cages::tutte_coxeter();
  auto hc = find_factor(tc, 2, ham);
  REQUIRE(hc.factor);
  auto t = split_cage(tc, *hc.factor);
  CHECK(t.graph.order() == 30);
  CHECK(t.window_low == 9);
  CHECK(t.girth >= Extended(9));
  CHECK(t.girth <= Extended(16));

  CHECK_THROWS(split_cage(petersen, cages::cycle(10)));
}

TEST_CASE("factor search", "[split]") {
  FactorOptions ham;
  ham.hamiltonian = true;
  CHECK(find_factor(cages::heawood(), 2, ham).factor);
  auto none = find_factor(cages::petersen(), 2, ham);
  CHECK_FALSE(none.factor);
  CHECK(none.exhausted);
  auto odd = find_factor(cages::robertson(), 1);
  CHECK_FALSE(odd.factor);
  CHECK(odd.exhausted);
}

TEST_CASE("Hamiltonian Moore cages", "[split]") {
  auto r = hamiltonian_moore_bound(3, 6);
  CHECK(r.bound == 14);
  CHECK(r.window_low == 7);
  CHECK(r.window_high == 8);
  CHECK(r.measured == 7);
  CHECK(r.corollary_short_cycle == true);
  for (int deg = 3; deg <= 6; ++deg) {
    auto q = hamiltonian_moore_bound(deg, 6);
    CHECK(q.bound == 2 * (deg * deg - deg + 1));
    CHECK(verify_witness(q.witness, {2, deg - 2, 7}));
  }
  auto t = hamiltonian_moore_bound(3, 8);
  CHECK(t.window_low == 9);
  CHECK(t.window_high == 11);
  CHECK(t.measured == 9);
  CHECK_THROWS(hamiltonian_moore_bound(3, 5));
}
