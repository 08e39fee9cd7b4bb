#include "lawsuite_internal.hpp"

namespace monadforge {

using namespace lawsuite_detail;

namespace {

Element unit_st(const Case& c, const SpacePtr& x, const Element& p) {
  return unit(c.S(), c.t_of(x), unit(c.T(), x, p));
}

ElementMap unit_st_map(const Case& c, const SpacePtr& x) {
  return ElementMap{x, c.st_of(x), [c, x](const Element& p) { return unit_st(c, x, p); }, false, "unit-ST"};
}

// s after U-multiplication after j at U: T U x -> S T x.
ElementMap spread_map(const Case& c, const SpacePtr& x) {
  return ElementMap{c.t_of(c.u_of(x)), c.st_of(x),
                    [c, x](const Element& v) {
                      return retraction_s(c, x, combined_mult(c, x, morphism_j(c, c.u_of(x), v)));
                    },
                    true, "s.mult.j"};
}

Element mult_u(const Case& c, const SpacePtr& x, const Element& ff) { return combined_mult(c, x, ff); }

// Prevision multiplication straight from the functional definition, as a
// representation: choice combinations of the inner generators.
Element direct_prevision_mult(const Case& c, const SpacePtr& x, const Element& ff) {
  auto side = [](const Element& f, bool lower) {
    if (f.kind() == NodeKind::Fork) return lower ? f.lower() : f.upper();
    return f.gens();
  };
  auto combos = [&](const std::vector<Element>& outer, bool lower) {
    std::vector<Element> out;
    for (const auto& xi : outer) {
      std::vector<std::vector<Atom>> partial{{}};
      for (const auto& at : xi.atoms()) {
        std::vector<std::vector<Atom>> next;
        for (const auto& prefix : partial) {
          for (const auto& g : side(at.child, lower)) {
            auto extended = prefix;
            for (const auto& inner : g.atoms()) extended.push_back(Atom{Rational(at.weight * inner.weight), inner.child});
            next.push_back(std::move(extended));
          }
        }
        partial = std::move(next);
      }
      for (auto& atoms : partial) out.push_back(Element::valuation(std::move(atoms)));
    }
    return out;
  };
  Element result = Element::point(0);
  switch (c.kind) {
    case PrevKind::DN: result = Element::prevision(PrevKind::DN, combos(side(ff, true), true)); break;
    case PrevKind::AN: result = Element::prevision(PrevKind::AN, combos(side(ff, false), false)); break;
    case PrevKind::ADN: result = Element::fork(combos(side(ff, true), true), combos(side(ff, false), false)); break;
  }
  return canonicalize(*c.u_of(x), result);
}

}  // namespace

SuiteReport run_retraction_laws(const Case& c, const SuiteConfig& cfg) {
  std::vector<Equation> eqs;
  eqs.push_back({"r-unit", [c](Rng& rng, const SpacePtr& x) {
                   Element p = Element::point(rng.below(x->poset()->size()));
                   return compare(c.u_of(x), retraction_r(c, x, unit_st(c, x, p)), unit(c.U(), x, p), {{"x", {x, p}}});
                 }, 0});
  eqs.push_back({"r-mult-S", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr sst = c.s_of(c.st_of(x));
                   Element qq = draw(sst, rng, cfg);
                   Element lhs = retraction_r(c, x, mult(c.S(), c.t_of(x), qq));
                   Element ir = morphism_i(c, c.u_of(x), fmap(c.S(), r_map(c, x), qq));
                   return compare(c.u_of(x), lhs, mult_u(c, x, ir), {{"Q", {sst, qq}}});
                 }, 3});
  eqs.push_back({"r-mult-T", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr stt = c.s_of(c.t_of(c.t_of(x)));
                   Element q = draw(stt, rng, cfg);
                   Element lhs = retraction_r(c, x, fmap(c.S(), mult_map(c.T(), x), q));
                   Element rj = retraction_r(c, c.u_of(x), fmap(c.S(), fmap_map(c.T(), j_map(c, x)), q));
                   return compare(c.u_of(x), lhs, mult_u(c, x, rj), {{"Q", {stt, q}}});
                 }, 3});
  eqs.push_back({"e-unit-S", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = c.t_of(x);
                   Element nu = draw(tx, rng, cfg);
                   Element eta = unit(c.S(), tx, nu);
                   return compare(c.st_of(x), e_closure(c, x, eta), eta, {{"nu", {tx, nu}}});
                 }, 1});
  eqs.push_back({"e-mult-T", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = c.t_of(x);
                   SpacePtr stt = c.st_of(tx);
                   Element q = draw(stt, rng, cfg);
                   ElementMap mu = mult_map(c.T(), x);
                   Element lhs = e_closure(c, x, fmap(c.S(), mu, q));
                   Element rhs = fmap(c.S(), mu, e_closure(c, tx, q));
                   return compare(c.st_of(x), lhs, rhs, {{"Q", {stt, q}}});
                 }, 3});
  eqs.push_back({"e-ext-U", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr ux = c.u_of(x);
                   SpacePtr stu = c.st_of(ux);
                   Element q = draw(stu, rng, cfg);
                   ElementMap f = spread_map(c, x);
                   Element lhs = e_closure(c, x, extend(c.S(), f, q));
                   Element rhs = extend(c.S(), f, e_closure(c, ux, q));
                   return compare(c.st_of(x), lhs, rhs, {{"Q", {stu, q}}});
                 }, 3});
  return run_all("retraction", eqs, c.name(), to_string(c.flavor), cfg);
}

SuiteReport run_weak_law(const Case& c, const SuiteConfig& cfg) {
  const MonadTag S = c.S();
  const MonadTag T = c.T();
  std::vector<Equation> eqs;
  auto lam = [c](const SpacePtr& x, const Element& xi) { return lambda(c, x, xi).value; };

  eqs.push_back({"lambda-unit-S", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = c.t_of(x);
                   Element nu = draw(tx, rng, cfg);
                   Element lhs = lam(x, fmap(T, unit_map(S, x), nu));
                   return compare(c.st_of(x), lhs, unit(S, tx, nu), {{"nu", {tx, nu}}});
                 }, 1});
  eqs.push_back({"lambda-mult-S", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr sx = c.s_of(x);
                   SpacePtr tss = c.t_of(c.s_of(sx));
                   Element xi = draw(tss, rng, cfg);
                   Element lhs = lam(x, fmap(T, mult_map(S, x), xi));
                   Element rhs = extend(S, lambda_map(c, x), lam(sx, xi));
                   return compare(c.st_of(x), lhs, rhs, {{"xi", {tss, xi}}});
                 }, 3});
  eqs.push_back({"lambda-mult-T", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr sx = c.s_of(x);
                   SpacePtr tts = c.t_of(c.t_of(sx));
                   Element xi = draw(tts, rng, cfg);
                   Element lhs = lam(x, mult(T, sx, xi));
                   Element inner = fmap(T, lambda_map(c, x), xi);
                   Element rhs = fmap(S, mult_map(T, x), lam(c.t_of(x), inner));
                   return compare(c.st_of(x), lhs, rhs, {{"xi", {tts, xi}}});
                 }, 3});
  eqs.push_back({"e-lambda", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr ts = c.t_of(c.s_of(x));
                   Element xi = draw(ts, rng, cfg);
                   Element l = lam(x, xi);
                   return compare(c.st_of(x), e_closure(c, x, l), l, {{"xi", {ts, xi}}});
                 }, 2});
  eqs.push_back({"e-unit-ST", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = c.t_of(x);
                   Element nu = draw(tx, rng, cfg);
                   Element eta = unit(S, tx, nu);
                   return compare(c.st_of(x), e_from_lambda(c, x, eta), eta, {{"nu", {tx, nu}}});
                 }, 1});
  eqs.push_back({"e-mult-T-nat", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = c.t_of(x);
                   SpacePtr stt = c.st_of(tx);
                   Element q = draw(stt, rng, cfg);
                   ElementMap mu = mult_map(T, x);
                   Element lhs = e_from_lambda(c, x, fmap(S, mu, q));
                   Element rhs = fmap(S, mu, e_from_lambda(c, tx, q));
                   return compare(c.st_of(x), lhs, rhs, {{"Q", {stt, q}}});
                 }, 3});
  eqs.push_back({"e-lambda-ext", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr sx = c.s_of(x);
                   SpacePtr sts = c.st_of(sx);
                   Element q = draw(sts, rng, cfg);
                   ElementMap ext = lambda_map(c, x);
                   Element lhs = e_closure(c, x, extend(S, ext, q));
                   Element rhs = extend(S, ext, e_closure(c, sx, q));
                   return compare(c.st_of(x), lhs, rhs, {{"Q", {sts, q}}});
                 }, 3});
  eqs.push_back({"lambda-T-e", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = c.t_of(x);
                   SpacePtr tst = c.t_of(c.st_of(x));
                   Element xi = draw(tst, rng, cfg);
                   ElementMap mu = mult_map(T, x);
                   Element lhs = fmap(S, mu, lam(tx, fmap(T, e_map(c, x), xi)));
                   Element rhs = fmap(S, mu, lam(tx, xi));
                   return compare(c.st_of(x), lhs, rhs, {{"xi", {tst, xi}}});
                 }, 3});
  eqs.push_back({"i-unit", [=](Rng& rng, const SpacePtr& x) {
                   Element p = Element::point(rng.below(x->poset()->size()));
                   return compare(c.u_of(x), morphism_i(c, x, unit(S, x, p)), unit(c.U(), x, p), {{"x", {x, p}}});
                 }, 0});
  eqs.push_back({"i-mult", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr ssx = c.s_of(c.s_of(x));
                   Element qq = draw(ssx, rng, cfg);
                   Element lhs = morphism_i(c, x, mult(S, x, qq));
                   Element ii = morphism_i(c, c.u_of(x), fmap(S, i_map(c, x), qq));
                   return compare(c.u_of(x), lhs, mult_u(c, x, ii), {{"Q", {ssx, qq}}});
                 }, 2});
  eqs.push_back({"j-unit", [=](Rng& rng, const SpacePtr& x) {
                   Element p = Element::point(rng.below(x->poset()->size()));
                   return compare(c.u_of(x), morphism_j(c, x, unit(T, x, p)), unit(c.U(), x, p), {{"x", {x, p}}});
                 }, 0});
  eqs.push_back({"j-mult", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr ttx = c.t_of(c.t_of(x));
                   Element vv = draw(ttx, rng, cfg);
                   Element lhs = morphism_j(c, x, mult(T, x, vv));
                   Element jj = morphism_j(c, c.u_of(x), fmap(T, j_map(c, x), vv));
                   return compare(c.u_of(x), lhs, mult_u(c, x, jj), {{"V", {ttx, vv}}});
                 }, 2});
  eqs.push_back({"s-j", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = c.t_of(x);
                   Element nu = draw(tx, rng, cfg);
                   return compare(c.st_of(x), retraction_s(c, x, morphism_j(c, x, nu)), unit(S, tx, nu),
                                  {{"nu", {tx, nu}}});
                 }, 1});
  eqs.push_back({"mu-ij", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr st = c.st_of(x);
                   Element q = draw(st, rng, cfg);
                   Element ij = morphism_i(c, c.u_of(x), fmap(S, j_map(c, x), q));
                   return compare(c.u_of(x), mult_u(c, x, ij), retraction_r(c, x, q), {{"q", {st, q}}});
                 }, 2});
  eqs.push_back({"A-e", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr stx = c.st_of(x);
                   SpacePtr stst = c.st_of(stx);
                   Element q = draw(stst, rng, cfg);
                   Element lhs = compose_A(c, x, e_closure(c, stx, q));
                   Element rhs = e_closure(c, x, compose_A(c, x, q));
                   return compare(stx, lhs, rhs, {{"Q", {stst, q}}});
                 }, 4});
  eqs.push_back({"B-e", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr ux = c.u_of(x);
                   SpacePtr stu = c.st_of(ux);
                   Element q = draw(stu, rng, cfg);
                   Element lhs = compose_B(c, x, e_closure(c, ux, q));
                   Element rhs = e_closure(c, x, compose_B(c, x, q));
                   return compare(c.st_of(x), lhs, rhs, {{"Q", {stu, q}}});
                 }, 3});
  eqs.push_back({"A-unit", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = c.t_of(x);
                   SpacePtr stt = c.st_of(tx);
                   Element q = draw(stt, rng, cfg);
                   Element lifted = fmap(S, fmap_map(T, unit_map(S, tx)), q);
                   Element rhs = fmap(S, mult_map(T, x), q);
                   return compare(c.st_of(x), compose_A(c, x, lifted), rhs, {{"Q", {stt, q}}});
                 }, 3});
  eqs.push_back({"A-Te", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr stx = c.st_of(x);
                   SpacePtr stst = c.st_of(stx);
                   Element q = draw(stst, rng, cfg);
                   Element lhs = compose_A(c, x, fmap(S, fmap_map(T, e_map(c, x)), q));
                   return compare(stx, lhs, compose_A(c, x, q), {{"Q", {stst, q}}});
                 }, 4});
  eqs.push_back({"A-unit-e", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr stx = c.st_of(x);
                   Element q = draw(stx, rng, cfg);
                   Element lhs = compose_A(c, x, unit_st(c, stx, q));
                   return compare(stx, lhs, e_closure(c, x, q), {{"q", {stx, q}}});
                 }, 2});
  eqs.push_back({"B-unit-s", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr ux = c.u_of(x);
                   Element f = draw(ux, rng, cfg);
                   Element lhs = compose_B(c, x, unit_st(c, ux, f));
                   return compare(c.st_of(x), lhs, retraction_s(c, x, f), {{"f", {ux, f}}});
                 }, 1});
  eqs.push_back({"A-unit-id", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr stx = c.st_of(x);
                   Element q = draw(stx, rng, cfg);
                   Element lifted = fmap(S, fmap_map(T, unit_st_map(c, x)), q);
                   return compare(stx, compose_A(c, x, lifted), q, {{"q", {stx, q}}});
                 }, 2});
  eqs.push_back({"s-unit-U", [=](Rng& rng, const SpacePtr& x) {
                   Element p = Element::point(rng.below(x->poset()->size()));
                   return compare(c.st_of(x), retraction_s(c, x, unit(c.U(), x, p)), unit_st(c, x, p), {{"x", {x, p}}});
                 }, 0});
  eqs.push_back({"C-unit-s", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr ux = c.u_of(x);
                   Element f = draw(ux, rng, cfg);
                   Element lifted = fmap(c.U(), unit_map(c.U(), x), f);
                   Element spread = fmap(c.U(), s_map(c, x), lifted);
                   return compare(c.st_of(x), compose_C(c, x, spread), retraction_s(c, x, f), {{"f", {ux, f}}});
                 }, 1});
  eqs.push_back({"lambda-unit-T-collapse", [=](Rng& rng, const SpacePtr& x) {
                   SpacePtr sx = c.s_of(x);
                   Element q = draw(sx, rng, cfg);
                   Element lhs = lam(x, unit(T, sx, q));
                   Element rhs = e_closure(c, x, fmap(S, unit_map(T, x), q));
                   return compare(c.st_of(x), lhs, rhs, {{"Q", {sx, q}}});
                 }, 1});
  return run_all("weaklaw", eqs, c.name(), to_string(c.flavor), cfg);
}

SuiteReport run_roundtrip(const Case& c, const SuiteConfig& cfg) {
  std::vector<Equation> eqs;
  eqs.push_back({"eta-U-representation", [c](Rng&, const SpacePtr& x) {
                   SpacePtr u = c.u_of(x);
                   for (int p = 0; p < x->poset()->size(); ++p) {
                     Element pt = Element::point(p);
                     Element built = retraction_r(c, x, unit_st(c, x, pt));
                     Element direct = canonicalize(*u, unit(c.U(), x, pt));
                     if (built.key() != direct.key()) {
                       json w = json::object();
                       w["x"] = x->poset()->label(p);
                       w["built"] = show(*u, built);
                       w["direct"] = show(*u, direct);
                       return Outcome{false, std::move(w)};
                     }
                   }
                   return Outcome{};
                 }, 0});
  eqs.push_back({"mu-U-evaluation", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr uux = c.u_of(c.u_of(x));
                   Element ff = draw(uux, rng, cfg);
                   Element flat = combined_mult(c, x, ff);
                   for (int k = 0; k < 10; ++k) {
                     LSCFunction h = random_lsc(x->poset(), rng);
                     bool same = c.kind == PrevKind::ADN
                                     ? evaluate_fork(flat, lift(h)) == fork_mult_eval(ff, lift(h))
                                     : evaluate_prevision(flat, lift(h)) == prevision_mult_eval(ff, lift(h));
                     if (!same) {
                       json w = json::object();
                       w["ff"] = show(*uux, ff);
                       w["h"] = lsc_to_json(h);
                       w["mult"] = show(*c.u_of(x), flat);
                       return Outcome{false, std::move(w)};
                     }
                   }
                   return Outcome{};
                 }, 2});
  eqs.push_back({"mu-U-representation", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr uux = c.u_of(c.u_of(x));
                   Element ff = draw(uux, rng, cfg);
                   return compare(c.u_of(x), combined_mult(c, x, ff), direct_prevision_mult(c, x, ff),
                                  {{"ff", {uux, ff}}});
                 }, 2});
  eqs.push_back({"split", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr st = c.st_of(x);
                   Element q = draw(st, rng, cfg);
                   return compare(st, retraction_s(c, x, retraction_r(c, x, q)), e_from_lambda(c, x, q),
                                  {{"q", {st, q}}});
                 }, 2});
  eqs.push_back({"retraction", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr u = c.u_of(x);
                   Element f = draw(u, rng, cfg);
                   return compare(u, retraction_r(c, x, retraction_s(c, x, f)), f, {{"f", {u, f}}});
                 }, 1});
  eqs.push_back({"lambda-recovered", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr ts = c.t_of(c.s_of(x));
                   Element xi = draw(ts, rng, cfg);
                   return compare(c.st_of(x), lambda_via_retraction(c, x, xi), lambda(c, x, xi).value,
                                  {{"xi", {ts, xi}}});
                 }, 2});
  return run_all("roundtrip", eqs, c.name(), to_string(c.flavor), cfg);
}

SuiteReport run_adn_components(Flavor flavor, const SuiteConfig& cfg) {
  const Case adn{PrevKind::ADN, flavor};
  const Case dn{PrevKind::DN, flavor};
  const Case an{PrevKind::AN, flavor};
  std::vector<Equation> eqs;
  for (int side = 0; side < 2; ++side) {
    const bool lower = side == 0;
    const Case part = lower ? dn : an;
    const std::string pi = lower ? "pi1" : "pi2";
    const std::string varpi = lower ? "varpi1" : "varpi2";
    auto proj = [lower](const Element& f) { return lower ? fork_lower(f) : fork_upper(f); };
    auto vproj = [lower](const Element& l) { return lower ? lens_upper_part(l) : lens_lower_part(l); };
    auto proj_map = [=](const SpacePtr& x) {
      return ElementMap{adn.u_of(x), part.u_of(x), proj, true, pi};
    };
    auto vproj_map = [=](const SpacePtr& y) {
      return ElementMap{Space::plotkin(y), part.s_of(y), vproj, true, varpi};
    };
    eqs.push_back({pi + "-r", [=](Rng& rng, const SpacePtr& x) {
                     SpacePtr pt = adn.st_of(x);
                     Element l = draw(pt, rng, cfg);
                     return compare(part.u_of(x), proj(retraction_r(adn, x, l)), retraction_r(part, x, vproj(l)),
                                    {{"L", {pt, l}}});
                   }, 2});
    eqs.push_back({varpi + "-s", [=](Rng& rng, const SpacePtr& x) {
                     SpacePtr u = adn.u_of(x);
                     Element f = draw(u, rng, cfg);
                     return compare(part.st_of(x), vproj(retraction_s(adn, x, f)), retraction_s(part, x, proj(f)),
                                    {{"F", {u, f}}});
                   }, 1});
    eqs.push_back({pi + "-unit", [=](Rng& rng, const SpacePtr& x) {
                     Element p = Element::point(rng.below(x->poset()->size()));
                     return compare(part.u_of(x), proj(unit(adn.U(), x, p)), unit(part.U(), x, p), {{"x", {x, p}}});
                   }, 0});
    eqs.push_back({pi + "-mult", [=](Rng& rng, const SpacePtr& x) {
                     SpacePtr uu = adn.u_of(adn.u_of(x));
                     Element ff = draw(uu, rng, cfg);
                     Element lhs = proj(combined_mult(adn, x, ff));
                     Element pp = fmap(part.U(), proj_map(x), proj(ff));
                     return compare(part.u_of(x), lhs, combined_mult(part, x, pp), {{"FF", {uu, ff}}});
                   }, 2});
    eqs.push_back({varpi + "-mult", [=](Rng& rng, const SpacePtr& x) {
                     SpacePtr pp = Space::plotkin(Space::plotkin(x));
                     Element ll = draw(pp, rng, cfg);
                     Element lhs = vproj(mult(MonadTag::plotkin(), x, ll));
                     Element inner = fmap(part.S(), vproj_map(x), vproj(ll));
                     return compare(part.s_of(x), lhs, mult(part.S(), x, inner), {{"LL", {pp, ll}}});
                   }, 2});
    eqs.push_back({varpi + "-e", [=](Rng& rng, const SpacePtr& x) {
                     SpacePtr pt = adn.st_of(x);
                     Element l = draw(pt, rng, cfg);
                     return compare(part.st_of(x), vproj(e_closure(adn, x, l)), e_closure(part, x, vproj(l)),
                                    {{"L", {pt, l}}});
                   }, 2});
    eqs.push_back({pi + "-i", [=](Rng& rng, const SpacePtr& x) {
                     SpacePtr px = Space::plotkin(x);
                     Element l = draw(px, rng, cfg);
                     return compare(part.u_of(x), proj(morphism_i(adn, x, l)), morphism_i(part, x, vproj(l)),
                                    {{"L", {px, l}}});
                   }, 1});
    eqs.push_back({pi + "-j", [=](Rng& rng, const SpacePtr& x) {
                     SpacePtr tx = adn.t_of(x);
                     Element nu = draw(tx, rng, cfg);
                     return compare(part.u_of(x), proj(morphism_j(adn, x, nu)), morphism_j(part, x, nu),
                                    {{"nu", {tx, nu}}});
                   }, 1});
  }
  return run_all("adn-components", eqs, "ADN", to_string(flavor), cfg);
}

}  // namespace monadforge
