#include "monadforge/distlaw.hpp"

#include "monadforge/mutation.hpp"

namespace monadforge {

MonadTag Case::S() const {
  switch (kind) {
    case PrevKind::DN: return MonadTag::smyth();
    case PrevKind::AN: return MonadTag::hoare();
    case PrevKind::ADN: return MonadTag::plotkin();
  }
  return MonadTag::smyth();
}

namespace {

std::vector<Element> part_gens(const std::vector<Part>& parts) {
  std::vector<Element> out;
  for (const auto& p : parts) out.insert(out.end(), p.gens.begin(), p.gens.end());
  return out;
}

std::vector<Element> upper_gens(const Case& c, const Element& q) {
  return c.kind == PrevKind::ADN ? part_gens(q.up_parts()) : part_gens(q.parts());
}

std::vector<Element> lower_gens(const Case& c, const Element& q) {
  return c.kind == PrevKind::ADN ? part_gens(q.down_parts()) : part_gens(q.parts());
}

// Prevision of the case's kind from generator lists for its min side and
// its sup side; DN ignores `sup`, AN ignores `min`.
Element make_prevision(const Case& c, std::vector<Element> min, std::vector<Element> sup) {
  switch (c.kind) {
    case PrevKind::DN: return Element::prevision(PrevKind::DN, std::move(min));
    case PrevKind::AN: return Element::prevision(PrevKind::AN, std::move(sup));
    case PrevKind::ADN: return Element::fork(std::move(min), std::move(sup));
  }
  return Element::prevision(PrevKind::DN, std::move(min));
}

// Generators of the min side (above) and sup side (below) of a prevision.
std::pair<std::vector<Element>, std::vector<Element>> prevision_sides(const Element& f) {
  if (f.kind() == NodeKind::Fork) return {f.lower(), f.upper()};
  return {f.gens(), f.gens()};
}

Element make_hyperset(const Case& c, std::vector<Element> up, std::vector<Element> down, bool convex) {
  switch (c.kind) {
    case PrevKind::DN: return Element::up_set(std::move(up), convex);
    case PrevKind::AN: return Element::down_set(std::move(down), convex);
    case PrevKind::ADN:
      return Element::lens(std::vector<Part>{Part{std::move(up), convex}},
                           std::vector<Part>{Part{std::move(down), convex}});
  }
  return Element::up_set(std::move(up), convex);
}

std::vector<Element> choice_combinations(const Element& xi, const std::vector<std::vector<Element>>& lists,
                                         std::size_t cap) {
  std::vector<std::vector<Atom>> combos{{}};
  const auto& atoms = xi.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& list = lists[i];
    if (list.empty()) throw LambdaError("hyperspace child without generators");
    if (combos.size() * list.size() > cap) {
      throw LambdaError("choice-function blowup: more than " + std::to_string(cap) + " combinations");
    }
    std::vector<std::vector<Atom>> next;
    for (const auto& partial : combos) {
      for (const auto& g : list) {
        auto extended = partial;
        extended.push_back(Atom{atoms[i].weight, g});
        next.push_back(std::move(extended));
      }
    }
    combos = std::move(next);
  }
  std::vector<Element> out;
  for (auto& atoms_of : combos) out.push_back(Element::valuation(std::move(atoms_of)));
  return out;
}

}  // namespace

Element retraction_r(const Case& c, const SpacePtr& x, const Element& q) {
  std::vector<Element> min = upper_gens(c, q);
  std::vector<Element> sup = lower_gens(c, q);
  Element f = Element::point(0);
  if (active_mutation() == Mutation::SwapMinSup) {
    switch (c.kind) {
      case PrevKind::DN: f = Element::prevision(PrevKind::AN, std::move(min)); break;
      case PrevKind::AN: f = Element::prevision(PrevKind::DN, std::move(sup)); break;
      case PrevKind::ADN: f = Element::fork(std::move(sup), std::move(min)); break;
    }
  } else {
    f = make_prevision(c, std::move(min), std::move(sup));
  }
  return canonicalize(*c.u_of(x), f);
}

Element retraction_s(const Case& c, const SpacePtr& x, const Element& f) {
  auto [min, sup] = prevision_sides(f);
  bool convex = active_mutation() != Mutation::DropConvex;
  return canonicalize(*c.st_of(x), make_hyperset(c, std::move(min), std::move(sup), convex));
}

Element e_closure(const Case& c, const SpacePtr& x, const Element& q) {
  return retraction_s(c, x, retraction_r(c, x, q));
}

Element morphism_i(const Case& c, const SpacePtr& x, const Element& q) {
  auto diracs = [](const std::vector<Element>& gens) {
    std::vector<Element> out;
    for (const auto& g : gens) out.push_back(Element::dirac(g));
    return out;
  };
  return canonicalize(*c.u_of(x), make_prevision(c, diracs(upper_gens(c, q)), diracs(lower_gens(c, q))));
}

Element morphism_j(const Case& c, const SpacePtr& x, const Element& nu) {
  Element v = canonicalize(*c.t_of(x), nu);
  return make_prevision(c, {v}, {v});
}

LambdaOutput lambda(const Case& c, const SpacePtr& x, const Element& xi, std::size_t cap) {
  if (xi.kind() != NodeKind::Valuation) throw LambdaError("lambda expects a valuation over hyperspace elements");
  SpacePtr sx = c.s_of(x);
  Element canon = canonicalize(*c.t_of(sx), xi);
  std::vector<std::vector<Element>> up_lists, down_lists;
  for (const auto& a : canon.atoms()) {
    const Element& q = a.child;
    bool fits = (c.kind == PrevKind::DN && q.kind() == NodeKind::UpSet) ||
                (c.kind == PrevKind::AN && q.kind() == NodeKind::DownSet) ||
                (c.kind == PrevKind::ADN && q.kind() == NodeKind::Lens);
    if (!fits) throw LambdaError("lambda input child " + q.key() + " is not in " + sx->describe());
    up_lists.push_back(upper_gens(c, q));
    down_lists.push_back(lower_gens(c, q));
  }
  LambdaOutput out{Element::point(0), {}};
  std::vector<Element> up, down;
  if (c.kind != PrevKind::AN) up = choice_combinations(canon, up_lists, cap);
  if (c.kind != PrevKind::DN) down = choice_combinations(canon, down_lists, cap);
  out.combinations = up;
  out.combinations.insert(out.combinations.end(), down.begin(), down.end());
  out.value = canonicalize(*c.st_of(x), make_hyperset(c, std::move(up), std::move(down), true));
  return out;
}

Element lambda_via_retraction(const Case& c, const SpacePtr& x, const Element& xi) {
  Element pushed = fmap(c.T(), i_map(c, x), xi);
  Element lifted = morphism_j(c, c.u_of(x), pushed);
  return retraction_s(c, x, combined_mult(c, x, lifted));
}

bool lambda_membership_oracle(const Case& c, const SpacePtr& x, const Element& xi, const Element& nu) {
  if (!x->is_base()) throw LambdaError("the membership oracle works over a base poset only");
  const FinitePoset& p = *x->poset();
  Rational mass = nu.mass();
  if (c.flavor == Flavor::One && mass != 1) return false;
  if (c.flavor == Flavor::Sub1 && mass > 1) return false;
  std::vector<std::pair<Rational, PointSet>> boxes;
  for (const auto& a : xi.atoms()) {
    auto mask = [](const std::vector<Element>& gens) {
      PointSet m = 0;
      for (const auto& g : gens) m |= singleton(g.index());
      return m;
    };
    PointSet set = 0;
    switch (c.kind) {
      case PrevKind::DN: set = p.up_closure(mask(upper_gens(c, a.child))); break;
      case PrevKind::AN: set = p.down_closure(mask(lower_gens(c, a.child))); break;
      case PrevKind::ADN:
        set = p.up_closure(mask(upper_gens(c, a.child))) & p.down_closure(mask(lower_gens(c, a.child)));
        break;
    }
    boxes.emplace_back(a.weight, set);
  }
  std::vector<Rational> w(static_cast<std::size_t>(p.size()));
  for (const auto& a : nu.atoms()) w[static_cast<std::size_t>(a.child.index())] += a.weight;
  for (PointSet u : p.enumerate_upsets()) {
    Rational nu_u = 0, inside = 0, meets = 0;
    for (int y : members(u)) nu_u += w[static_cast<std::size_t>(y)];
    for (const auto& [weight, set] : boxes) {
      if ((set & ~u) == 0) inside += weight;
      if ((set & u) != 0) meets += weight;
    }
    if (c.kind != PrevKind::AN && nu_u < inside) return false;
    if (c.kind != PrevKind::DN && nu_u > meets) return false;
  }
  return true;
}

Element e_from_lambda(const Case& c, const SpacePtr& x, const Element& q) {
  SpacePtr tx = c.t_of(x);
  Element xi = Element::dirac(q);
  Element spread = lambda(c, tx, xi).value;
  return fmap(c.S(), mult_map(c.T(), x), spread);
}

Element compose_A(const Case& c, const SpacePtr& x, const Element& q) {
  SpacePtr tx = c.t_of(x);
  ElementMap mu_t = mult_map(c.T(), x);
  ElementMap step{c.t_of(c.st_of(x)), c.st_of(x),
                  [c, tx, mu_t](const Element& xi) { return fmap(c.S(), mu_t, lambda(c, tx, xi).value); }, true,
                  "S(mult).lambda"};
  return extend(c.S(), step, q);
}

Element compose_B(const Case& c, const SpacePtr& x, const Element& q) {
  Element lifted = fmap(c.S(), fmap_map(c.T(), s_map(c, x)), q);
  return compose_A(c, x, lifted);
}

Element compose_C(const Case& c, const SpacePtr& x, const Element& f) {
  return compose_A(c, x, retraction_s(c, c.st_of(x), f));
}

Element combined_mult(const Case& c, const SpacePtr& x, const Element& ff) {
  Element spread = retraction_s(c, c.u_of(x), ff);
  return retraction_r(c, x, compose_B(c, x, spread));
}

ElementMap r_map(const Case& c, const SpacePtr& x) {
  return ElementMap{c.st_of(x), c.u_of(x), [c, x](const Element& q) { return retraction_r(c, x, q); }, false, "r"};
}

ElementMap s_map(const Case& c, const SpacePtr& x) {
  return ElementMap{c.u_of(x), c.st_of(x), [c, x](const Element& f) { return retraction_s(c, x, f); }, false, "s"};
}

ElementMap e_map(const Case& c, const SpacePtr& x) {
  return ElementMap{c.st_of(x), c.st_of(x), [c, x](const Element& q) { return e_closure(c, x, q); }, false, "e"};
}

ElementMap i_map(const Case& c, const SpacePtr& x) {
  return ElementMap{c.s_of(x), c.u_of(x), [c, x](const Element& q) { return morphism_i(c, x, q); }, false, "i"};
}

ElementMap j_map(const Case& c, const SpacePtr& x) {
  return ElementMap{c.t_of(x), c.u_of(x), [c, x](const Element& v) { return morphism_j(c, x, v); }, true, "j"};
}

ElementMap lambda_map(const Case& c, const SpacePtr& x) {
  return ElementMap{c.t_of(c.s_of(x)), c.st_of(x), [c, x](const Element& xi) { return lambda(c, x, xi).value; },
                    true, "lambda"};
}

}  // namespace monadforge
