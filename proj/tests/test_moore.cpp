#include <catch_amalgamated.hpp>

#include "wcage/catalog.hpp"
#include "wcage/moore.hpp"
#include "wcage/search.hpp"
#include "wcage/split.hpp"

using namespace wcage;

TEST_CASE("wcycle existence characterization", "[existence]") {
  CHECK_FALSE(wcycle_exists({1, 2, 4}));
  CHECK(wcycle_exists({1, 2, 5}));
  CHECK(wcycle_exists({1, 1, 6}));
  CHECK_FALSE(wcycle_exists({1, 1, 5}));
  CHECK_FALSE(wcycle_exists({1, 1, 7}));
  CHECK_FALSE(wcycle_exists({0, 3, 7}));
  CHECK(wcycle_exists({0, 3, 8}));
  CHECK(wcycle_exists({2, 0, 3}));
  CHECK_FALSE(wcycle_exists({0, 1, 6}));
  CHECK_THROWS(wcycle_exists({2, 2, 2}));
}

TEST_CASE("closed special values", "[special]") {
  auto v = special_exact_value({1, 1, 9});
  REQUIRE(v.known());
  CHECK(v.value == 6);
  CHECK(special_exact_value({1, 1, 7}).value.is_infinite());
  CHECK(special_exact_value({3, 0, 5}).value == 10);
  CHECK(special_exact_value({0, 3, 12}).value == 14);
  CHECK(special_exact_value({0, 3, 7}).value.is_infinite());
  // No (9,5)-cage in the catalog: reported as unknown.
  CHECK(special_exact_value({9, 0, 5}).status == SpecialValue::Status::unknown);
  CHECK(special_exact_value({2, 2, 5}).status == SpecialValue::Status::not_applicable);
}

TEST_CASE("Moore-like level sums", "[levels]") {
  CHECK(levels(2, 2, TreeBase::odd, 4).total() == 37);
  CHECK(levels(2, 2, TreeBase::even_light, 3).total() == 24);
  auto t = levels(1, 0, TreeBase::odd, 5);
  CHECK(t.light == std::vector<long long>{1, 1, 0, 0, 0, 0});
  CHECK(t.heavy == std::vector<long long>(6, 0));
  CHECK_THROWS(levels(1, 1, TreeBase::odd, 0));
}

TEST_CASE("bound reports", "[bounds]") {
  auto r = moore_bounds({4, 1, 5});
  CHECK(r.m1 == 18);
  CHECK(r.m1_plus == 18);

  r = moore_bounds({1, 2, 10});
  CHECK(r.m2 == 14);
  CHECK(r.m3 == 15);
  CHECK(r.moore == 16);
  CHECK(r.combined == 16);

  CHECK(moore_bounds({2, 1, 13}).combined == 66);
  CHECK(moore_bounds({2, 2, 5}).m1 == 7);

  r = moore_bounds({0, 1, 6});
  CHECK_FALSE(r.exists);
  CHECK(r.trivial == 2);
  CHECK(moore_bounds({3, 3, 3}).trivial == 8);
}

TEST_CASE("closed forms", "[closed-form]") {
  CHECK(closed_form(7, 1, 2) == 8);
  CHECK(closed_form(6, 2, 1) == 8);
  CHECK(closed_form(3, 5, 7) == 6);
  CHECK_THROWS(closed_form(13, 1, 1));
  CHECK_THROWS(closed_form(2, 1, 1));
}

TEST_CASE("closed forms equal level sums for a, b <= 10", "[closed-form]") {
  for (int g = 3; g <= 12; ++g)
    for (int a = 1; a <= 10; ++a)
      for (int b = 1; b <= 10; ++b) {
        auto r = moore_bounds({a, b, g});
        long long sum = g % 2 ? *r.m1 : *r.m2;
        INFO("g=" << g << " a=" << a << " b=" << b);
        CHECK(sum == closed_form(g, a, b));
      }
}

TEST_CASE("parity: the bound is even when a or b is odd", "[bounds]") {
  for (int g = 3; g <= 12; ++g)
    for (int a = 1; a <= 8; ++a)
      for (int b = 1; b <= 8; ++b)
        if (a % 2 || b % 2) CHECK(moore_bounds({a, b, g}).moore % 2 == 0);
}

TEST_CASE("nonexistence implies an infinite special value", "[special]") {
  for (int g = 3; g <= 12; ++g)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        if (!wcycle_exists({a, b, g})) CHECK(special_exact_value({a, b, g}).value.is_infinite());
}

TEST_CASE("excess", "[excess]") {
  auto heawood = split_catalog_cage(3, 6, 2, 7);
  REQUIRE(heawood);
  CHECK(excess(heawood->split.graph, {2, 1, 7}) == 2);

  SearchConfig cfg;
  auto tight = find_wcage({1, 2, 5}, cfg);
  REQUIRE(tight.witness);
  CHECK(excess(*tight.witness, {1, 2, 5}) == 0);

  auto big = find_wcage({2, 1, 10}, cfg);
  REQUIRE(big.witness);
  CHECK(excess(*big.witness, {2, 1, 10}) == 4);

  CHECK_THROWS(excess(*tight.witness, {1, 2, 6}));
}

TEST_CASE("checked arithmetic aborts on overflow", "[bounds]") {
  CHECK_THROWS_AS(levels(100000, 100000, TreeBase::odd, 12), std::overflow_error);
}
