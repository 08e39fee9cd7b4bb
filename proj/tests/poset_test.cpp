#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_SUITE("poset") {

TEST_CASE("validate accepts a chain and names failing pairs") {
  CHECK_FALSE(validate(Relation{{"a", "b"}, {{0, 0}, {1, 1}, {0, 1}}}).has_value());

  auto anti = validate(Relation{{"a", "b"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}});
  REQUIRE(anti.has_value());
  CHECK(anti->kind == Violation::Kind::Antisymmetry);
  CHECK(anti->a == 0);
  CHECK(anti->b == 1);

  auto refl = validate(Relation{{"a", "b"}, {{1, 1}}});
  REQUIRE(refl.has_value());
  CHECK(refl->kind == Violation::Kind::Reflexivity);
  CHECK(refl->a == 0);

  auto trans = validate(Relation{{"a", "b", "c"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}});
  REQUIRE(trans.has_value());
  CHECK(trans->kind == Violation::Kind::Transitivity);
}

TEST_CASE("constructor rejects invalid input") {
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, {{0, 1}, {1, 0}}), PosetError);
  CHECK_THROWS_AS(FinitePoset({"a", "a"}, {}), PosetError);
  CHECK_THROWS_AS(FinitePoset({"a"}, {{0, 3}}), PosetError);
}

TEST_CASE("closures") {
  auto c2 = standard_poset(PosetKind::Chain, 2);
  CHECK(c2.up_closure(singleton(0)) == 0b11);
  auto a2 = standard_poset(PosetKind::Antichain, 2);
  CHECK(a2.up_closure(singleton(0)) == 0b01);
  auto c3 = standard_poset(PosetKind::Chain, 3);
  CHECK(c3.order_convex_closure(0b101) == 0b111);
  CHECK(c3.down_closure(singleton(1)) == 0b011);
}

TEST_CASE("closure properties on every subset of small standard posets") {
  for (auto kind : {PosetKind::Chain, PosetKind::Antichain, PosetKind::Diamond, PosetKind::Random}) {
    for (int n = 2; n <= 5; ++n) {
      auto p = standard_poset(kind, n, 11);
      for (PointSet e = 0; e <= p.all(); ++e) {
        CHECK(p.up_closure(p.up_closure(e)) == p.up_closure(e));
        CHECK((p.up_closure(e) & e) == e);
        CHECK(p.down_closure(p.down_closure(e)) == p.down_closure(e));
        CHECK((p.order_convex_closure(e) & e) == e);
        for (PointSet f = e; f <= p.all(); ++f) {
          if ((e & f) == e) CHECK((p.up_closure(e) & p.up_closure(f)) == p.up_closure(e));
        }
      }
      for (int x = 0; x < n; ++x) CHECK(p.order_convex_closure(singleton(x)) == singleton(x));
    }
  }
}

TEST_CASE("up-set enumeration") {
  auto c2 = standard_poset(PosetKind::Chain, 2);
  CHECK(c2.enumerate_upsets() == std::vector<PointSet>{0b00, 0b10, 0b11});
  auto a2 = standard_poset(PosetKind::Antichain, 2);
  CHECK(a2.enumerate_upsets() == std::vector<PointSet>{0b00, 0b01, 0b10, 0b11});
  CHECK(standard_poset(PosetKind::Antichain, 3).enumerate_upsets().size() == 8);
  for (int n = 1; n <= 6; ++n) {
    CHECK(standard_poset(PosetKind::Chain, n).enumerate_upsets().size() == static_cast<std::size_t>(n + 1));
    CHECK(standard_poset(PosetKind::Antichain, n).enumerate_upsets().size() == (std::size_t{1} << n));
    auto r = standard_poset(PosetKind::Random, n, 3);
    CHECK(r.enumerate_upsets() == powerset_upsets(r));
  }
  CHECK_THROWS_AS(standard_poset(PosetKind::Chain, 13).enumerate_upsets(), PosetError);
}

TEST_CASE("standard posets") {
  auto d = standard_poset(PosetKind::Diamond, 4);
  CHECK(d.leq(0, 1));
  CHECK(d.leq(0, 2));
  CHECK(d.leq(1, 3));
  CHECK(d.leq(2, 3));
  CHECK_FALSE(d.leq(1, 2));
  CHECK_FALSE(d.leq(2, 1));
  CHECK(standard_poset(PosetKind::Random, 4, 7) == standard_poset(PosetKind::Random, 4, 7));
  auto c = standard_poset(PosetKind::Chain, 2);
  CHECK(c.leq(0, 1));
  CHECK_FALSE(c.leq(1, 0));
}

TEST_CASE("monotone iff inverse images preserve up-sets") {
  auto src = std::make_shared<const FinitePoset>(standard_poset(PosetKind::Diamond, 4));
  auto dst = std::make_shared<const FinitePoset>(standard_poset(PosetKind::Chain, 3));
  std::vector<int> f(4);
  for (int code = 0; code < 81; ++code) {
    int c = code;
    for (int i = 0; i < 4; ++i, c /= 3) f[static_cast<std::size_t>(i)] = c % 3;
    bool preserves = true;
    for (PointSet u : dst->enumerate_upsets()) {
      PointSet pre = 0;
      for (int x = 0; x < 4; ++x) {
        if (contains(u, f[static_cast<std::size_t>(x)])) pre |= singleton(x);
      }
      if (!src->is_up_set(pre)) preserves = false;
    }
    CHECK(is_monotone(*src, *dst, f) == preserves);
    if (preserves) {
      CHECK_NOTHROW(MonotoneMap(src, dst, f));
    } else {
      CHECK_THROWS_AS(MonotoneMap(src, dst, f), PosetError);
    }
  }
}

TEST_CASE("lower semicontinuous functions are monotone") {
  auto p = std::make_shared<const FinitePoset>(standard_poset(PosetKind::Chain, 2));
  CHECK_NOTHROW(LSCFunction(p, {ExtRational(1), ExtRational::infinity()}));
  CHECK_THROWS_AS(LSCFunction(p, {ExtRational(2), ExtRational(1)}), PosetError);
  auto h = LSCFunction::indicator(p, 0b10) + LSCFunction::indicator(p, 0b11);
  CHECK(h(0) == ExtRational(1));
  CHECK(h(1) == ExtRational(2));
}

}
