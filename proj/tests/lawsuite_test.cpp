#include "doctest.h"
#include "monadforge/lawsuite.hpp"
#include "support.hpp"

using namespace testing;

namespace {

SuiteConfig small(int instances) {
  SuiteConfig cfg;
  cfg.seed = 11;
  cfg.instances = instances;
  return cfg;
}

const Case kDN{PrevKind::DN, Flavor::One};

}  // namespace

TEST_SUITE("lawsuite") {

TEST_CASE("reports are deterministic per seed") {
  auto cfg = small(5);
  auto a = to_json(run_suite("retraction", {PrevKind::DN, PrevKind::ADN}, Flavor::Sub1, cfg));
  auto b = to_json(run_suite("retraction", {PrevKind::DN, PrevKind::ADN}, Flavor::Sub1, cfg));
  CHECK(a.dump() == b.dump());
  cfg.seed = 12;
  auto c = to_json(run_suite("retraction", {PrevKind::DN, PrevKind::ADN}, Flavor::Sub1, cfg));
  CHECK(c["failures"] == 0);
}

TEST_CASE("parallel runs merge by instance index") {
  auto cfg = small(8);
  auto serial = to_json(run_suite("weaklaw", {PrevKind::AN}, Flavor::One, cfg));
  cfg.parallelism = 3;
  auto parallel = to_json(run_suite("weaklaw", {PrevKind::AN}, Flavor::One, cfg));
  CHECK(serial.dump() == parallel.dump());
}

TEST_CASE("report json shape and millis only on request") {
  auto r = run_suite("idempotent", {PrevKind::DN}, Flavor::One, small(3));
  REQUIRE(r.equations.size() == 2);
  json j = to_json(r.equations[0]);
  CHECK(j["equation"] == "e-from-lambda");
  CHECK(j["case"] == "DN");
  CHECK(j["flavor"] == "one");
  CHECK(j["instances"] == 3);
  CHECK(j["failures"] == 0);
  CHECK(j["witness"].is_null());
  CHECK_FALSE(j.contains("millis"));
  CHECK(to_json(r.equations[0], true).contains("millis"));
  CHECK(to_text(r).rfind("PASS idempotent e-from-lambda DN one 3/3", 0) == 0);
}

TEST_CASE("max depth skips deep equations") {
  auto cfg = small(2);
  cfg.max_depth = 1;
  auto r = run_weak_law(kDN, cfg);
  for (const auto& eq : r.equations) CHECK(eq.equation != "A-e");
  CHECK(r.failures() == 0);
}

TEST_CASE("compare records inputs and both sides") {
  auto a = antichain(2);
  SpacePtr t = Space::val(a, Flavor::One);
  auto o = compare(t, dirac_pt(0), dirac_pt(1), {{"x", {a, pt(0)}}});
  CHECK_FALSE(o.ok);
  CHECK(o.witness["lhs"] == "δa");
  CHECK(o.witness["rhs"] == "δb");
  CHECK(o.witness["inputs"]["x"] == "a");
  CHECK(compare(t, dirac_pt(0), dirac_pt(0), {}).ok);
}

TEST_CASE("non-distributivity witness on the two-point antichain") {
  for (PrevKind k : {PrevKind::DN, PrevKind::AN, PrevKind::ADN}) {
    Case c{k, Flavor::One};
    auto w = find_nondistributivity_witness(c, {poset_of(PosetKind::Antichain, 2)});
    REQUIRE(w.has_value());
    CHECK(w->verified());
    Element half = val({{q(1, 2), 0}, {q(1, 2), 1}});
    CHECK(w->separating == half);
    // Independent check over all up-sets: the half-half valuation is not
    // above (DN) or below (AN) either Dirac, and for DN it meets the
    // lambda bound nu(U) >= [Q inside U].
    const auto& p = *w->poset;
    bool above_a = brute_stochastic_leq(p, dirac_pt(0), half);
    bool above_b = brute_stochastic_leq(p, dirac_pt(1), half);
    bool below_a = brute_stochastic_leq(p, half, dirac_pt(0));
    bool below_b = brute_stochastic_leq(p, half, dirac_pt(1));
    CHECK_FALSE((above_a || above_b));
    CHECK_FALSE((below_a || below_b));
    if (k == PrevKind::DN) {
      for (PointSet u : powerset_upsets(p)) {
        Rational bound = u == p.all() ? q(1) : q(0);
        CHECK(mass_on(half, u) >= bound);
      }
    }
  }
}

TEST_CASE("no witness on chains up to four points") {
  for (PrevKind k : {PrevKind::DN, PrevKind::AN, PrevKind::ADN}) {
    for (int n = 1; n <= 4; ++n) {
      CHECK_FALSE(find_nondistributivity_witness(Case{k, Flavor::One}, {poset_of(PosetKind::Chain, n)}).has_value());
    }
  }
}

TEST_CASE("witness json") {
  auto w = find_nondistributivity_witness(kDN);
  REQUIRE(w.has_value());
  json j = to_json(kDN, *w);
  CHECK(j["q"] == "↑{a, b}");
  CHECK(j["lambda"] == "↑conv{δa, δb}");
  CHECK(j["unit_image"] == "↑{δa, δb}");
  CHECK(j["separating"] == "1/2δa+1/2δb");
}

TEST_CASE("free algebra passes, corrupted beta fails") {
  auto cfg = small(10);
  CHECK(run_algebra_checks(kDN, cfg).failures() == 0);
  AlgebraFactory corrupted = [](Rng&, const SpacePtr& base) {
    AlgebraStructure a = free_algebra(kDN, base);
    // Collapses a valuation onto its first atom, pretending to be affine.
    a.beta = ElementMap{a.beta.source, a.carrier, [](const Element& nu) { return nu.atoms().front().child; }, true,
                        "first-atom"};
    return a;
  };
  auto r = run_algebra_checks(kDN, corrupted, cfg);
  CHECK(r.failures() > 0);
  bool witnessed = false;
  for (const auto& eq : r.equations) witnessed = witnessed || (eq.failures > 0 && eq.witness.has_value());
  CHECK(witnessed);
}

TEST_CASE("each mutation is detected with a witness") {
  auto cfg = small(0);
  for (Mutation m : {Mutation::DropConvex, Mutation::DropMultTerm, Mutation::SwapMinSup}) {
    CAPTURE(to_string(m));
    MutationDetection d = detect_mutation(m, cfg);
    CHECK(d.detected);
    REQUIRE(d.failing.witness.has_value());
    CHECK(d.failing.witness->contains("lhs"));
    CHECK(active_mutation() == Mutation::None);
  }
}

TEST_CASE("drop-mult-term breaks the VAL unit law") {
  ScopedMutation scope(Mutation::DropMultTerm);
  auto r = run_monad_laws({MonadTag::val(Flavor::All)}, small(20));
  CHECK(r.failures() > 0);
}

TEST_CASE("unmutated suites are clean on a second seed") {
  auto cfg = small(4);
  cfg.seed = 99;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    CHECK(run_suite(name, {PrevKind::DN, PrevKind::AN, PrevKind::ADN}, Flavor::Sub1, cfg).failures() == 0);
  }
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(default_instances("nope"), std::invalid_argument); }

}
