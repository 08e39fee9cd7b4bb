#include "doctest.h"
#include "monadforge/rng.hpp"
#include "support.hpp"

using namespace testing;
using namespace monadforge::lp;

TEST_SUITE("exactlp") {

TEST_CASE("rational and extended rational arithmetic") {
  CHECK(parse_rational("2/4") == q(1, 2));
  CHECK(to_string(q(6, 4)) == "3/2");
  CHECK(to_string(q(3)) == "3");
  CHECK_THROWS(parse_rational("1/0"));
  ExtRational inf = ExtRational::infinity();
  CHECK(Rational(0) * inf == ExtRational(0));
  CHECK(q(1, 2) * inf == inf);
  CHECK(ExtRational(q(5)) + inf == inf);
  CHECK(ExtRational(q(5)) < inf);
  CHECK(ExtRational::parse("inf") == inf);
  CHECK(ExtRational::parse("7/3").value() == q(7, 3));
}

TEST_CASE("feasibility examples") {
  LinearFeasibilityProblem p;
  int x = p.add_variable("x");
  p.add_ge({{x, 1}}, 0);
  p.add_le({{x, 1}}, 1);
  p.add_eq({{x, 1}}, q(1, 2));
  auto w = feasible(p);
  REQUIRE(w.has_value());
  CHECK((*w)[0] == q(1, 2));

  LinearFeasibilityProblem bad;
  int y = bad.add_variable("y");
  bad.add_ge({{y, 1}}, 1);
  bad.add_le({{y, 1}}, 0);
  CHECK_FALSE(feasible(bad).has_value());

  LinearFeasibilityProblem dims;
  dims.add_variable("z");
  CHECK_THROWS_AS(dims.add_eq({{3, 1}}, 0), LpError);
}

TEST_CASE("free variables and negative right-hand sides") {
  LinearFeasibilityProblem p;
  int x = p.add_variable("x", false);
  int y = p.add_variable("y");
  p.add_eq({{x, 1}, {y, 1}}, -2);
  p.add_ge({{y, 1}}, 1);
  auto w = feasible(p);
  REQUIRE(w.has_value());
  CHECK(p.satisfied_by(*w));
  CHECK((*w)[0] <= -3);
}

TEST_CASE("witnesses re-verify on random systems") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng = Rng::derive(seed, "lp", 0);
    LinearFeasibilityProblem p;
    int n = rng.between(1, 5);
    for (int v = 0; v < n; ++v) p.add_variable("v" + std::to_string(v), rng.chance(3, 4));
    int m = rng.between(1, 5);
    for (int c = 0; c < m; ++c) {
      std::vector<Term> terms;
      for (int v = 0; v < n; ++v) terms.push_back({v, make_rational(rng.between(-4, 4), rng.between(1, 3))});
      auto sense = static_cast<Sense>(rng.below(3));
      p.add_constraint(terms, sense, make_rational(rng.between(-5, 5), rng.between(1, 4)));
    }
    auto w = feasible(p);
    if (w) CHECK(p.satisfied_by(*w));
  }
}

TEST_CASE("transport system for a chain") {
  auto x = chain(2);
  auto tv = Space::val(x, Flavor::One);
  auto prob = coupling_problem(*tv, dirac_pt(0), dirac_pt(1));
  auto w = feasible(prob);
  REQUIRE(w.has_value());
  Rational total = 0;
  for (const auto& v : *w) total += v;
  CHECK(total == 1);
}

TEST_CASE("stochastic order examples") {
  auto c = chain(2);
  auto a = antichain(2);
  auto tc = Space::val(c, Flavor::One);
  auto ta = Space::val(a, Flavor::One);
  for (auto m : {StochasticMethod::Enumerate, StochasticMethod::Coupling}) {
    CHECK(stochastic_leq(*tc, dirac_pt(0), dirac_pt(1), m));
    CHECK_FALSE(stochastic_leq(*ta, dirac_pt(0), dirac_pt(1), m));
    CHECK(stochastic_leq(*tc, val({{q(1, 2), 0}, {q(1, 2), 1}}), dirac_pt(1), m));
  }
  CHECK_THROWS_AS(stochastic_leq(*Space::val(tc, Flavor::One), Element::dirac(dirac_pt(0)),
                                 Element::dirac(dirac_pt(1)), StochasticMethod::Enumerate),
                  MethodError);
}

TEST_CASE("unequal masses use partial transport") {
  auto c = chain(2);
  auto t = Space::val(c, Flavor::Sub1);
  CHECK(stochastic_leq(*t, val({{q(1, 2), 1}}), dirac_pt(1)));
  CHECK_FALSE(stochastic_leq(*t, dirac_pt(1), val({{q(1, 2), 1}})));
  CHECK(stochastic_leq(*t, val({{q(1, 2), 1}}), val({{q(1, 2), 1}, {q(1, 2), 0}})));
  CHECK_FALSE(stochastic_leq(*t, val({{q(1, 2), 1}}), val({{q(1, 2), 0}})));
}

TEST_CASE("convex membership examples") {
  auto a = antichain(2);
  auto t = Space::val(a, Flavor::One);
  Element half = val({{q(1, 2), 0}, {q(1, 2), 1}});
  CHECK(convex_up_membership(*t, half, {dirac_pt(0), dirac_pt(1)}));
  CHECK_FALSE(convex_up_membership(*t, dirac_pt(0), {half}));
  for (const auto& g : {half, dirac_pt(0)}) {
    CHECK(convex_up_membership(*t, g, {g, dirac_pt(1)}));
    CHECK(convex_down_membership(*t, g, {g, dirac_pt(1)}));
  }
}

TEST_CASE("convex membership is monotone") {
  auto c = chain(3);
  auto t = Space::val(c, Flavor::One);
  std::vector<Element> gens{val({{q(1, 2), 0}, {q(1, 2), 2}}), dirac_pt(1)};
  Element low = val({{q(1, 4), 0}, {q(3, 4), 1}});
  Element high = val({{q(1, 4), 1}, {q(3, 4), 2}});
  CHECK(convex_up_membership(*t, high, gens));
  CHECK_FALSE(convex_up_membership(*t, low, gens));
  CHECK(convex_down_membership(*t, low, gens));
  CHECK_FALSE(convex_down_membership(*t, high, gens));
}

}
