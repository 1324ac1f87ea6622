#include <catch_amalgamated.hpp>

#include "wcage/constructions.hpp"
#include "wcage/naive.hpp"
#include "wcage/report.hpp"
#include "wcage/search.hpp"

using namespace wcage;

TEST_CASE("single orders", "[search]") {
  SearchConfig cfg;
  auto found = exists_wgraph({2, 2, 5}, 7, cfg);
  REQUIRE(found.status == OrderStatus::found);
  CHECK(verify_witness(*found.witness, {2, 2, 5}));
  CHECK(found.witness->order() == 7);

  CHECK(exists_wgraph({2, 2, 5}, 6, cfg).status == OrderStatus::proven_none);

  auto parity = exists_wgraph({3, 1, 5}, 11, cfg);
  CHECK(parity.status == OrderStatus::proven_none);
  CHECK(parity.nodes == 0);
  CHECK(parity.shortcut == "parity");

  auto small = exists_wgraph({3, 1, 5}, 10, cfg);
  CHECK(small.status == OrderStatus::proven_none);
  CHECK(small.shortcut == "lower-bound");
}

TEST_CASE("find_wcage on small parameters", "[search]") {
  SearchConfig cfg;
  const std::vector<std::pair<Params, int>> expected{
      {{1, 2, 5}, 4}, {{2, 1, 6}, 8}, {{1, 2, 8}, 10}, {{4, 1, 5}, 20}, {{3, 1, 4}, 8}, {{3, 2, 4}, 6}};
  for (const auto& [p, v] : expected) {
    auto o = find_wcage(p, cfg);
    INFO(to_string(p));
    REQUIRE(o.status == SearchStatus::exact);
    CHECK(o.value == v);
    CHECK(verify_witness(*o.witness, p));
    CHECK(o.lower_bound <= v);
  }
}

TEST_CASE("nonexistence and budget outcomes", "[search]") {
  SearchConfig cfg;
  auto none = find_wcage({1, 1, 5}, cfg);
  CHECK(none.status == SearchStatus::nonexistent);
  CHECK(none.value.is_infinite());

  SearchConfig tiny;
  tiny.node_budget = 50;
  auto b = find_wcage({1, 3, 8}, tiny);
  CHECK(b.status == SearchStatus::budget_exceeded);
  CHECK(b.value.value() >= b.lower_bound);
  for (const auto& e : b.exhausted_orders) CHECK(e.n < b.value.value());

  SearchConfig capped;
  capped.max_order = 14;
  auto lo = find_wcage({1, 3, 8}, capped);
  CHECK(lo.status == SearchStatus::lower_only);
  CHECK(lo.value == 15);
}

TEST_CASE("exhaustion certificates cover every feasible order below the value", "[search]") {
  SearchConfig cfg;
  for (Params p : {Params{3, 1, 5}, Params{1, 3, 8}, Params{2, 1, 7}}) {
    auto o = find_wcage(p, cfg);
    REQUIRE(o.status == SearchStatus::exact);
    std::vector<int> want;
    for (long long n = o.lower_bound; n < o.value.value(); ++n)
      if ((p.a * n) % 2 == 0 && (p.b * n) % 2 == 0) want.push_back(static_cast<int>(n));
    std::vector<int> got;
    for (const auto& e : o.exhausted_orders) got.push_back(e.n);
    CHECK(got == want);
  }
}

TEST_CASE("search never undercuts the lower bound", "[search]") {
  SearchConfig cfg;
  for (int g = 3; g <= 7; ++g)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        auto o = find_wcage({a, b, g}, cfg);
        if (o.status != SearchStatus::exact) continue;
        CHECK(o.value.value() >= moore_bounds({a, b, g}).combined);
      }
}

TEST_CASE("search agrees with the optimal constructions up to order 14", "[search][agreement]") {
  SearchConfig cfg;
  int compared = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = 0; b <= 8; ++b) {
      const Extended v3 = g3_value(a, b), v4 = g4_value(a, b);
      if (v3.is_finite() && v3.value() <= 14) {
        INFO("g=3 a=" << a << " b=" << b);
        CHECK(find_wcage({a, b, 3}, cfg).value == v3);
        ++compared;
      }
      if (v4.is_finite() && v4.value() <= 14) {
        INFO("g=4 a=" << a << " b=" << b);
        CHECK(find_wcage({a, b, 4}, cfg).value == v4);
        ++compared;
      }
      for (int g = 5; g <= 6; ++g) {
        auto v = g56_value(a, b, g);
        if (v && *v <= 14) {
          INFO("g=" << g << " a=" << a << " b=" << b);
          CHECK(find_wcage({a, b, g}, cfg).value == *v);
          ++compared;
        }
      }
    }
  CHECK(compared > 50);
}

TEST_CASE("worker count does not change the outcome", "[search][determinism]") {
  for (Params p : {Params{2, 2, 6}, Params{1, 3, 8}, Params{3, 1, 5}, Params{1, 1, 5}}) {
    SearchConfig one, four;
    four.worker_count = 4;
    auto x = search_json(find_wcage(p, one)).dump();
    auto y = search_json(find_wcage(p, four)).dump();
    INFO(to_string(p));
    CHECK(x == y);
  }
}

TEST_CASE("pruning toggles do not change the answer", "[search]") {
  SearchConfig plain;
  plain.prune_moore = false;
  plain.prune_degree = false;
  SearchConfig canon;
  canon.canon_depth = 3;
  for (Params p : {Params{2, 2, 5}, Params{1, 2, 7}, Params{2, 1, 6}}) {
    auto ref = find_wcage(p, SearchConfig{});
    CHECK(find_wcage(p, plain).value == ref.value);
    CHECK(find_wcage(p, canon).value == ref.value);
  }
}

TEST_CASE("naive enumeration", "[naive]") {
  auto w = naive_enumerate({1, 2, 5}, 4);
  REQUIRE(w);
  CHECK(verify_witness(*w, {1, 2, 5}));
  auto c = naive_enumerate({1, 1, 6}, 4);
  REQUIRE(c);
  CHECK(verify_witness(*c, {1, 1, 6}));
  CHECK_FALSE(naive_enumerate({2, 2, 3}, 5));
  CHECK(naive_enumerate({2, 2, 3}, 6));
  CHECK_THROWS(naive_enumerate({1, 1, 6}, 8));
}

TEST_CASE("naive enumeration agrees with the search on a sample", "[naive][oracle]") {
  SearchConfig cfg;
  for (int g = 3; g <= 6; ++g)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b + a <= 3; ++b)
        for (int n = 1; n <= 6; ++n) {
          Params p{a, b, g};
          auto x = naive_enumerate(p, n);
          auto y = exists_wgraph(p, n, cfg);
          INFO(to_string(p) << " n=" << n);
          REQUIRE(y.status != OrderStatus::budget_exceeded);
          CHECK(x.has_value() == (y.status == OrderStatus::found));
          if (x) CHECK(verify_witness(*x, p));
        }
}
