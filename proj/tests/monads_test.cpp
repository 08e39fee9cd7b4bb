#include "doctest.h"
#include "monadforge/mutation.hpp"
#include "monadforge/random.hpp"
#include "monadforge/rng.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("monads") {

TEST_CASE("units") {
  auto a = antichain(2);
  CHECK(unit(MonadTag::smyth(), a, pt(0)).key() == Element::up_set(pts({0}), false).key());
  CHECK(unit(MonadTag::val(Flavor::One), chain(2), pt(1)).key() == val({{q(1), 1}}).key());
  CHECK(unit(MonadTag::prev(PrevKind::DN, Flavor::One), a, pt(0)).key() ==
        Element::prevision(PrevKind::DN, {dirac_pt(0)}).key());
  CHECK(unit(MonadTag::prev(PrevKind::ADN, Flavor::One), a, pt(0)).key() ==
        Element::fork({dirac_pt(0)}, {dirac_pt(0)}).key());
}

TEST_CASE("functor action") {
  auto a = antichain(2);
  auto c = chain(2);
  auto id_ac = monotone_map(a, c, MonotoneMap(a->poset(), c->poset(), {0, 1}));
  Element image = fmap(MonadTag::smyth(), id_ac, Element::up_set(pts({0, 1}), false));
  CHECK(image.key() == canonicalize(*Space::smyth(c), Element::up_set(pts({0}), false)).key());
  Element pushed = fmap(MonadTag::val(Flavor::One), id_ac, val({{q(1, 2), 0}, {q(1, 2), 1}}));
  CHECK(pushed.key() == val({{q(1, 2), 0}, {q(1, 2), 1}}).key());
  auto to_b = monotone_map(a, a, MonotoneMap(a->poset(), a->poset(), {1, 1}));
  CHECK(fmap(MonadTag::hoare(), to_b, Element::down_set(pts({0, 1}), false)).key() ==
        Element::down_set(pts({1}), false).key());
}

TEST_CASE("multiplication examples") {
  auto a = antichain(2);
  auto sa = Space::smyth(a);
  Element inner1 = Element::up_set(pts({0}), false);
  Element inner2 = Element::up_set(pts({0, 1}), false);
  Element flat = mult(MonadTag::smyth(), a, Element::up_set({inner1, inner2}, false));
  CHECK(flat.key() == canonicalize(*sa, inner2).key());

  Element xi = Element::valuation({Atom{q(1, 2), dirac_pt(0)}, Atom{q(1, 2), val({{q(1, 2), 0}, {q(1, 2), 1}})}});
  CHECK(mult(MonadTag::val(Flavor::One), a, xi).key() == val({{q(3, 4), 0}, {q(1, 4), 1}}).key());

  Element f = Element::prevision(PrevKind::DN, {dirac_pt(0), dirac_pt(1)});
  Element ff = Element::prevision(PrevKind::DN, {Element::dirac(f)});
  auto u = Space::prev(a, PrevKind::DN, Flavor::One);
  CHECK(equal_elements(*u, mult(MonadTag::prev(PrevKind::DN, Flavor::One), a, ff), f));
}

TEST_CASE("dropped multiplication term changes the flattening") {
  auto a = antichain(2);
  Element xi = Element::valuation({Atom{q(1, 2), dirac_pt(0)}, Atom{q(1, 2), dirac_pt(1)}});
  ScopedMutation m(Mutation::DropMultTerm);
  CHECK(mult(MonadTag::val(Flavor::One), a, xi).key() != val({{q(1, 2), 0}, {q(1, 2), 1}}).key());
}

TEST_CASE("extension examples") {
  auto a = antichain(2);
  auto sa = Space::smyth(a);
  Element qset = Element::up_set(pts({0, 1}), false);
  CHECK(extend(MonadTag::smyth(), unit_map(MonadTag::smyth(), a), qset).key() == canonicalize(*sa, qset).key());
  auto ta = Space::val(a, Flavor::One);
  Element nu = val({{q(1, 3), 0}, {q(2, 3), 1}});
  CHECK(extend(MonadTag::val(Flavor::One), unit_map(MonadTag::val(Flavor::One), a), nu).key() == nu.key());
  auto swap = tabled_map(a, ta, {dirac_pt(1), dirac_pt(0)});
  CHECK(extend(MonadTag::val(Flavor::One), swap, nu).key() == canonicalize(*ta, val({{q(1, 3), 1}, {q(2, 3), 0}})).key());
  CHECK_THROWS_AS(tabled_map(a, ta, {dirac_pt(1)}), KleisliError);
}

TEST_CASE("valuation multiplication is affine and matches integration") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Rng rng = Rng::derive(seed, "affine", 0);
    auto x = Space::base(random_base(rng, 4));
    auto t = Space::val(x, Flavor::One);
    auto tt = Space::val(t, Flavor::One);
    Element x1 = random_element(*tt, rng);
    Element x2 = random_element(*tt, rng);
    Rational w = make_rational(rng.between(0, 4), 4);
    std::vector<Atom> mix;
    for (const auto& at : x1.atoms()) mix.push_back(Atom{Rational(w * at.weight), at.child});
    for (const auto& at : x2.atoms()) mix.push_back(Atom{Rational((1 - w) * at.weight), at.child});
    auto tag = MonadTag::val(Flavor::One);
    Element lhs = mult(tag, x, canonicalize(*tt, Element::valuation(mix)));
    std::vector<Atom> sum;
    for (const auto& at : mult(tag, x, x1).atoms()) sum.push_back(Atom{Rational(w * at.weight), at.child});
    for (const auto& at : mult(tag, x, x2).atoms()) sum.push_back(Atom{Rational((1 - w) * at.weight), at.child});
    CHECK(lhs.key() == canonicalize(*t, Element::valuation(sum)).key());

    LSCFunction h = random_lsc(x->poset(), rng);
    PointFunction outer = [&](const Element& v) { return integrate(v, lift(h)); };
    CHECK(integrate(mult(tag, x, x1), lift(h)) == integrate(x1, outer));
  }
}

TEST_CASE("prevision multiplication agrees with the functional definition") {
  for (auto kind : {PrevKind::DN, PrevKind::AN, PrevKind::ADN}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Rng rng = Rng::derive(seed, "prevmult", static_cast<std::uint64_t>(kind));
      auto x = Space::base(random_base(rng, 3));
      auto tag = MonadTag::prev(kind, Flavor::One);
      auto uu = tag.apply(tag.apply(x));
      Element ff = random_element(*uu, rng, GenBudget{2, 2, 4});
      Element flat = mult(tag, x, ff);
      for (int k = 0; k < 4; ++k) {
        LSCFunction h = random_lsc(x->poset(), rng);
        if (kind == PrevKind::ADN) {
          CHECK(evaluate_fork(flat, lift(h)) == fork_mult_eval(ff, lift(h)));
        } else {
          CHECK(evaluate_prevision(flat, lift(h)) == prevision_mult_eval(ff, lift(h)));
        }
      }
    }
  }
}

}
