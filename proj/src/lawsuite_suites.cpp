#include "lawsuite_internal.hpp"

namespace monadforge {

using namespace lawsuite_detail;

namespace {

std::vector<Rational> random_weights(int k, Flavor flavor, Rng& rng) {
  int total = 4;
  if (flavor == Flavor::Sub1) total = rng.between(1, 4);
  if (flavor == Flavor::All) total = rng.between(1, 8);
  std::vector<int> units(static_cast<std::size_t>(k), 0);
  for (int u = 0; u < total; ++u) ++units[static_cast<std::size_t>(rng.below(k))];
  std::vector<Rational> out;
  for (int u : units) out.push_back(make_rational(u, 4));
  return out;
}

Element weighted_points(const std::vector<Rational>& w, const std::vector<int>& points) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < w.size(); ++i) atoms.push_back(Atom{w[i], Element::point(points[i])});
  return Element::valuation(std::move(atoms));
}

}  // namespace

ElementMap random_kleisli(const MonadTag& tag, const SpacePtr& x, const SpacePtr& y, Rng& rng) {
  int k = rng.between(1, 3);
  std::vector<std::vector<int>> family;
  for (int i = 0; i < k; ++i) family.push_back(random_monotone_assignment(*x->poset(), *y->poset(), rng));
  auto images = [&](int p) {
    std::vector<int> out;
    for (const auto& g : family) out.push_back(g[static_cast<std::size_t>(p)]);
    return out;
  };
  std::vector<std::vector<Rational>> weights;
  int gens = tag.kind == MonadTag::Kind::Prev ? rng.between(1, 2) : 1;
  for (int g = 0; g < gens; ++g) weights.push_back(random_weights(k, tag.flavor, rng));
  std::vector<Element> table;
  SpacePtr target = tag.apply(y);
  for (int p = 0; p < x->poset()->size(); ++p) {
    std::vector<int> img = images(p);
    std::vector<Element> points;
    for (int v : img) points.push_back(Element::point(v));
    Element value = Element::point(0);
    switch (tag.kind) {
      case MonadTag::Kind::Smyth: value = Element::up_set(points, false); break;
      case MonadTag::Kind::Hoare: value = Element::down_set(points, false); break;
      case MonadTag::Kind::Plotkin: value = Element::lens(points, false); break;
      case MonadTag::Kind::Val: value = weighted_points(weights[0], img); break;
      case MonadTag::Kind::Prev: {
        std::vector<Element> vals;
        for (const auto& w : weights) vals.push_back(weighted_points(w, img));
        value = tag.prev_kind == PrevKind::ADN ? Element::fork(vals, vals) : Element::prevision(tag.prev_kind, vals);
        break;
      }
    }
    table.push_back(canonicalize(*target, value));
  }
  return tabled_map(x, target, std::move(table), "kleisli");
}

namespace {

ElementMap extension_map(const MonadTag& tag, const ElementMap& f) {
  return ElementMap{tag.apply(f.source), f.target, [tag, f](const Element& e) { return extend(tag, f, e); }, true,
                    "ext(" + f.name + ")"};
}

std::vector<Equation> monad_equations(const MonadTag& tag, const SuiteConfig& cfg) {
  std::vector<Equation> eqs;
  eqs.push_back({"manes-unit-ext", [tag, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr y = rng.chance(1, 2) ? x : Space::val(x, tag.flavor);
                   SpacePtr ty = tag.apply(y);
                   Element e = draw(ty, rng, cfg);
                   return compare(ty, extend(tag, unit_map(tag, y), e), e, {{"e", {ty, e}}});
                 }, 2});
  eqs.push_back({"manes-ext-unit", [tag, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr y = Space::base(random_base(rng, cfg.max_base_size));
                   ElementMap f = random_kleisli(tag, x, y, rng);
                   for (int p = 0; p < x->poset()->size(); ++p) {
                     Element pt = Element::point(p);
                     Outcome o = compare(f.target, extend(tag, f, unit(tag, x, pt)), f(pt), {{"x", {x, pt}}});
                     if (!o.ok) return o;
                   }
                   return Outcome{};
                 }, 1});
  eqs.push_back({"manes-ext-compose", [tag, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr y = Space::base(random_base(rng, cfg.max_base_size));
                   SpacePtr z = Space::base(random_base(rng, cfg.max_base_size));
                   ElementMap f = random_kleisli(tag, x, y, rng);
                   ElementMap g = random_kleisli(tag, y, z, rng);
                   SpacePtr tx = tag.apply(x);
                   Element e = draw(tx, rng, cfg);
                   Element lhs = extend(tag, g, extend(tag, f, e));
                   Element rhs = extend(tag, compose(extension_map(tag, g), f), e);
                   return compare(tag.apply(z), lhs, rhs, {{"e", {tx, e}}});
                 }, 1});
  eqs.push_back({"mult-unit-inner", [tag, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = tag.apply(x);
                   Element e = draw(tx, rng, cfg);
                   return compare(tx, mult(tag, x, fmap(tag, unit_map(tag, x), e)), e, {{"e", {tx, e}}});
                 }, 1});
  eqs.push_back({"mult-unit-outer", [tag, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = tag.apply(x);
                   Element e = draw(tx, rng, cfg);
                   return compare(tx, mult(tag, x, unit(tag, tx, e)), e, {{"e", {tx, e}}});
                 }, 1});
  eqs.push_back({"mult-assoc", [tag, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr tx = tag.apply(x);
                   SpacePtr ttt = tag.apply(tag.apply(tx));
                   Element e = draw(ttt, rng, cfg);
                   Element lhs = mult(tag, x, fmap(tag, mult_map(tag, x), e));
                   Element rhs = mult(tag, x, mult(tag, tx, e));
                   return compare(tx, lhs, rhs, {{"e", {ttt, e}}});
                 }, 3});
  if (tag.kind == MonadTag::Kind::Val) {
    eqs.push_back({"mult-affine", [tag, cfg](Rng& rng, const SpacePtr& x) {
                     SpacePtr tx = tag.apply(x);
                     SpacePtr ttx = tag.apply(tx);
                     Element e1 = draw(ttx, rng, cfg);
                     Element e2 = draw(ttx, rng, cfg);
                     Rational w = make_rational(rng.between(0, 4), 4);
                     auto mix = [&](const Element& a, const Element& b) {
                       std::vector<Atom> atoms;
                       for (const auto& at : a.atoms()) atoms.push_back(Atom{Rational(w * at.weight), at.child});
                       for (const auto& at : b.atoms()) atoms.push_back(Atom{Rational((1 - w) * at.weight), at.child});
                       return Element::valuation(std::move(atoms));
                     };
                     Element lhs = mult(tag, x, canonicalize(*ttx, mix(e1, e2)));
                     Element rhs = canonicalize(*tx, mix(mult(tag, x, e1), mult(tag, x, e2)));
                     return compare(tx, lhs, rhs, {{"e1", {ttx, e1}}, {"e2", {ttx, e2}}});
                   }, 2});
    eqs.push_back({"integration-iso", [tag, cfg](Rng& rng, const SpacePtr& x) {
                     SpacePtr ttx = tag.apply(tag.apply(x));
                     Element e = draw(ttx, rng, cfg);
                     LSCFunction h = random_lsc(x->poset(), rng);
                     PointFunction inner = lift(h);
                     PointFunction outer = [&](const Element& v) { return integrate(v, inner); };
                     ExtRational lhs = integrate(mult(tag, x, e), inner);
                     ExtRational rhs = integrate(e, outer);
                     ExtRational unit_side = integrate(unit(tag, x, Element::point(0)), inner);
                     if (lhs == rhs && unit_side == h(0)) return Outcome{};
                     json w = json::object();
                     w["e"] = show(*ttx, e);
                     w["h"] = lsc_to_json(h);
                     w["lhs"] = lhs.str();
                     w["rhs"] = rhs.str();
                     return Outcome{false, std::move(w)};
                   }, 2});
  }
  if (tag.kind == MonadTag::Kind::Prev) {
    eqs.push_back({"mult-functional", [tag, cfg](Rng& rng, const SpacePtr& x) {
                     SpacePtr uux = tag.apply(tag.apply(x));
                     Element ff = draw(uux, rng, cfg);
                     Element flat = mult(tag, x, ff);
                     for (int k = 0; k < 3; ++k) {
                       LSCFunction h = random_lsc(x->poset(), rng);
                       bool same = tag.prev_kind == PrevKind::ADN
                                       ? evaluate_fork(flat, lift(h)) == fork_mult_eval(ff, lift(h))
                                       : evaluate_prevision(flat, lift(h)) == prevision_mult_eval(ff, lift(h));
                       if (!same) {
                         json w = json::object();
                         w["ff"] = show(*uux, ff);
                         w["h"] = lsc_to_json(h);
                         w["mult"] = show(*tag.apply(x), flat);
                         return Outcome{false, std::move(w)};
                       }
                     }
                     return Outcome{};
                   }, 2});
  }
  return eqs;
}

}  // namespace

SuiteReport run_monad_laws(const std::vector<MonadTag>& tags, const SuiteConfig& cfg) {
  SuiteReport report{"monad", {}};
  for (const auto& tag : tags) {
    std::string flavor = tag.is_hyperspace() ? "-" : to_string(tag.flavor);
    report.append(run_all("monad", monad_equations(tag, cfg), tag.name(), flavor, cfg));
  }
  return report;
}

SuiteReport run_strassen(Flavor flavor, const SuiteConfig& cfg) {
  Equation eq{"coupling-vs-enumeration", [flavor, cfg](Rng& rng, const SpacePtr& x) {
                SpacePtr tx = Space::val(x, flavor);
                Element a = draw(tx, rng, cfg);
                Element b = draw(tx, rng, cfg);
                if (rng.chance(1, 2)) {
                  // Push the mass of a upwards so that a <= b is guaranteed.
                  std::vector<Atom> atoms;
                  const FinitePoset& p = *x->poset();
                  for (const auto& at : a.atoms()) {
                    std::vector<int> above = members(p.up_of(at.child.index()));
                    atoms.push_back(Atom{at.weight, Element::point(above[static_cast<std::size_t>(
                                                        rng.below(static_cast<int>(above.size())))])});
                  }
                  if (flavor != Flavor::One && rng.chance(1, 2)) atoms.push_back(Atom{make_rational(1, 8), Element::point(0)});
                  b = canonicalize(*tx, Element::valuation(std::move(atoms)));
                  if (flavor == Flavor::Sub1 && b.mass() > 1) b = a;
                }
                bool coupling = lp::stochastic_leq(*tx, a, b, lp::StochasticMethod::Coupling);
                bool enumerate = lp::stochastic_leq(*tx, a, b, lp::StochasticMethod::Enumerate);
                if (coupling == enumerate) return Outcome{};
                json w = json::object();
                w["a"] = show(*tx, a);
                w["b"] = show(*tx, b);
                w["coupling"] = coupling;
                w["enumeration"] = enumerate;
                return Outcome{false, std::move(w)};
              }, 1};
  SuiteConfig local = cfg;
  local.max_base_size = std::max(cfg.max_base_size, 5);
  return run_all("strassen", {eq}, "-", to_string(flavor), local);
}

SuiteReport run_lambda_dual(const Case& c, const SuiteConfig& cfg) {
  Equation eq{"formula-vs-open-sets", [c, cfg](Rng& rng, const SpacePtr& x) {
                SpacePtr tsx = c.t_of(c.s_of(x));
                SpacePtr tx = c.t_of(x);
                Element xi = draw(tsx, rng, cfg);
                LambdaOutput out = lambda(c, x, xi);
                Element nu = draw(tx, rng, cfg);
                if (rng.chance(2, 3) && !out.combinations.empty()) {
                  // A mixture of two choice combinations, then maybe one atom moved.
                  const auto& combos = out.combinations;
                  const Element& a = combos[static_cast<std::size_t>(rng.below(static_cast<int>(combos.size())))];
                  const Element& b = combos[static_cast<std::size_t>(rng.below(static_cast<int>(combos.size())))];
                  Rational w = make_rational(rng.between(0, 4), 4);
                  std::vector<Atom> atoms;
                  for (const auto& at : a.atoms()) atoms.push_back(Atom{Rational(w * at.weight), at.child});
                  for (const auto& at : b.atoms()) atoms.push_back(Atom{Rational((1 - w) * at.weight), at.child});
                  if (rng.chance(1, 2) && !atoms.empty()) {
                    auto& moved = atoms[static_cast<std::size_t>(rng.below(static_cast<int>(atoms.size())))];
                    moved.child = Element::point(rng.below(x->poset()->size()));
                  }
                  nu = canonicalize(*tx, Element::valuation(std::move(atoms)));
                }
                bool formula = true;
                if (c.kind != PrevKind::AN) {
                  const auto& parts = c.kind == PrevKind::ADN ? out.value.up_parts() : out.value.parts();
                  formula = formula && member(*tx, parts, nu, Direction::Up);
                }
                if (c.kind != PrevKind::DN) {
                  const auto& parts = c.kind == PrevKind::ADN ? out.value.down_parts() : out.value.parts();
                  formula = formula && member(*tx, parts, nu, Direction::Down);
                }
                bool oracle = lambda_membership_oracle(c, x, xi, nu);
                if (formula == oracle) return Outcome{};
                json w = json::object();
                w["xi"] = show(*tsx, xi);
                w["nu"] = show(*tx, nu);
                w["lambda"] = show(*c.st_of(x), out.value);
                w["formula"] = formula;
                w["oracle"] = oracle;
                return Outcome{false, std::move(w)};
              }, 2};
  return run_all("lambda-dual", {eq}, c.name(), to_string(c.flavor), cfg);
}

SuiteReport run_idempotent(const Case& c, const SuiteConfig& cfg) {
  std::vector<Equation> eqs;
  eqs.push_back({"e-from-lambda", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr st = c.st_of(x);
                   Element q = draw(st, rng, cfg);
                   return compare(st, e_from_lambda(c, x, q), e_closure(c, x, q), {{"q", {st, q}}});
                 }, 2});
  eqs.push_back({"e-idempotent", [c, cfg](Rng& rng, const SpacePtr& x) {
                   SpacePtr st = c.st_of(x);
                   Element q = draw(st, rng, cfg);
                   Element once = e_closure(c, x, q);
                   Outcome o = compare(st, e_closure(c, x, once), once, {{"q", {st, q}}});
                   if (!o.ok) return o;
                   Element via = e_from_lambda(c, x, q);
                   return compare(st, e_from_lambda(c, x, via), via, {{"q", {st, q}}});
                 }, 2});
  return run_all("idempotent", eqs, c.name(), to_string(c.flavor), cfg);
}

SuiteReport run_naturality(const Case& c, const SuiteConfig& cfg) {
  auto base_map = [cfg](Rng& rng, const SpacePtr& x) {
    SpacePtr y = Space::base(random_base(rng, cfg.max_base_size));
    auto assignment = random_monotone_assignment(*x->poset(), *y->poset(), rng);
    return monotone_map(x, y, MonotoneMap(x->poset(), y->poset(), assignment));
  };
  std::vector<Equation> eqs;
  eqs.push_back({"r-natural", [c, cfg, base_map](Rng& rng, const SpacePtr& x) {
                   ElementMap g = base_map(rng, x);
                   SpacePtr st = c.st_of(x);
                   Element q = draw(st, rng, cfg);
                   Element lhs = fmap(c.U(), g, retraction_r(c, x, q));
                   Element rhs = retraction_r(c, g.target, fmap(c.S(), fmap_map(c.T(), g), q));
                   return compare(c.u_of(g.target), lhs, rhs, {{"q", {st, q}}});
                 }, 2});
  eqs.push_back({"s-natural", [c, cfg, base_map](Rng& rng, const SpacePtr& x) {
                   ElementMap g = base_map(rng, x);
                   SpacePtr u = c.u_of(x);
                   Element f = draw(u, rng, cfg);
                   Element lhs = fmap(c.S(), fmap_map(c.T(), g), retraction_s(c, x, f));
                   Element rhs = retraction_s(c, g.target, fmap(c.U(), g, f));
                   return compare(c.st_of(g.target), lhs, rhs, {{"f", {u, f}}});
                 }, 1});
  eqs.push_back({"lambda-natural", [c, cfg, base_map](Rng& rng, const SpacePtr& x) {
                   ElementMap g = base_map(rng, x);
                   SpacePtr ts = c.t_of(c.s_of(x));
                   Element xi = draw(ts, rng, cfg);
                   Element lhs = fmap(c.S(), fmap_map(c.T(), g), lambda(c, x, xi).value);
                   Element rhs = lambda(c, g.target, fmap(c.T(), fmap_map(c.S(), g), xi)).value;
                   return compare(c.st_of(g.target), lhs, rhs, {{"xi", {ts, xi}}});
                 }, 2});
  return run_all("naturality", eqs, c.name(), to_string(c.flavor), cfg);
}

}  // namespace monadforge
