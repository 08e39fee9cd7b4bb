#include "monadforge/monads.hpp"

#include "monadforge/distlaw.hpp"
#include "monadforge/mutation.hpp"

namespace monadforge {

SpacePtr MonadTag::apply(const SpacePtr& space) const {
  switch (kind) {
    case Kind::Smyth: return Space::smyth(space);
    case Kind::Hoare: return Space::hoare(space);
    case Kind::Plotkin: return Space::plotkin(space);
    case Kind::Val: return Space::val(space, flavor);
    case Kind::Prev: return Space::prev(space, prev_kind, flavor);
  }
  return space;
}

std::string MonadTag::name() const {
  switch (kind) {
    case Kind::Smyth: return "SMYTH";
    case Kind::Hoare: return "HOARE";
    case Kind::Plotkin: return "PLOTKIN";
    case Kind::Val: return "VAL(" + to_string(flavor) + ")";
    case Kind::Prev: return "PREV(" + to_string(prev_kind) + "," + to_string(flavor) + ")";
  }
  return "?";
}

ElementMap tabled_map(const SpacePtr& source, const SpacePtr& target, std::vector<Element> table, std::string name) {
  if (!source->is_base()) throw KleisliError("tables are indexed by the points of a base space");
  if (static_cast<int>(table.size()) != source->poset()->size()) {
    throw KleisliError("table has " + std::to_string(table.size()) + " entries for " +
                       std::to_string(source->poset()->size()) + " points");
  }
  for (auto& t : table) {
    check_element(*target, t);
    t = canonicalize(*target, t);
  }
  auto rule = [table = std::move(table)](const Element& e) -> Element {
    if (e.kind() != NodeKind::Point || e.index() >= static_cast<int>(table.size())) {
      throw KleisliError("uncovered generator " + e.key());
    }
    return table[static_cast<std::size_t>(e.index())];
  };
  return ElementMap{source, target, rule, false, std::move(name)};
}

ElementMap monotone_map(const SpacePtr& source, const SpacePtr& target, const MonotoneMap& f) {
  std::vector<Element> table;
  for (int x = 0; x < source->poset()->size(); ++x) table.push_back(Element::point(f(x)));
  return tabled_map(source, target, std::move(table), "monotone");
}

ElementMap identity_map(const SpacePtr& space) {
  return ElementMap{space, space, [](const Element& e) { return e; }, true, "id"};
}

ElementMap compose(const ElementMap& g, const ElementMap& f) {
  return ElementMap{f.source, g.target, [g, f](const Element& e) { return g(f(e)); }, g.affine && f.affine,
                    g.name + "." + f.name};
}

bool is_monotone_on_base(const ElementMap& f) {
  const FinitePoset& p = *f.source->poset();
  for (auto [x, y] : p.strict_pairs()) {
    if (!leq_elements(*f.target, f(Element::point(x)), f(Element::point(y)))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

Element dirac_prevision(PrevKind kind, const Element& x) {
  Element d = Element::dirac(x);
  if (kind == PrevKind::ADN) return Element::fork({d}, {d});
  return Element::prevision(kind, {d});
}

std::vector<Element> map_all(const ElementMap& f, const std::vector<Element>& gens) {
  std::vector<Element> out;
  for (const auto& g : gens) out.push_back(f(g));
  return out;
}

std::vector<Part> map_parts(const ElementMap& f, const std::vector<Part>& parts) {
  std::vector<Part> out;
  for (const auto& p : parts) {
    if (p.convex && p.gens.size() > 1 && !f.affine) {
      throw RepresentationError("map '" + f.name + "' is not affine; its image of a convex part is not finitely presented");
    }
    out.push_back(Part{map_all(f, p.gens), p.convex});
  }
  return out;
}

Element push_forward(const ElementMap& f, const Element& v) {
  std::vector<Atom> atoms;
  for (const auto& a : v.atoms()) atoms.push_back(Atom{a.weight, f(a.child)});
  return Element::valuation(std::move(atoms));
}

enum class Side { Up, Down };

const std::vector<Part>& side_parts(const Element& e, Side side) {
  if (e.kind() == NodeKind::Lens) return side == Side::Up ? e.up_parts() : e.down_parts();
  return e.parts();
}

// Union of the images of the generators. A convex part maps to the convex
// hull of the union of its generators' images, which requires an affine map
// whose images are single convex pieces.
std::vector<Part> extend_parts(const ElementMap& f, const std::vector<Part>& parts, Side side) {
  std::vector<Part> out;
  for (const auto& p : parts) {
    if (!p.convex || p.gens.size() == 1) {
      for (const auto& g : p.gens) {
        Element image = f(g);
        const auto& img = side_parts(image, side);
        out.insert(out.end(), img.begin(), img.end());
      }
      continue;
    }
    if (!f.affine) {
      throw RepresentationError("extension of non-affine map '" + f.name + "' over a convex part");
    }
    Part merged{{}, true};
    for (const auto& g : p.gens) {
      Element image = f(g);
      const auto& img = side_parts(image, side);
      if (img.size() != 1 || (!img[0].convex && img[0].gens.size() > 1)) {
        throw RepresentationError("affine extension needs single convex images, got a union for " + g.key());
      }
      merged.gens.insert(merged.gens.end(), img[0].gens.begin(), img[0].gens.end());
    }
    out.push_back(std::move(merged));
  }
  return out;
}

}  // namespace

Element unit(const MonadTag& tag, const SpacePtr& space, const Element& x) {
  Element c = canonicalize(*space, x);
  switch (tag.kind) {
    case MonadTag::Kind::Smyth: return Element::up_set({c}, false);
    case MonadTag::Kind::Hoare: return Element::down_set({c}, false);
    case MonadTag::Kind::Plotkin: return Element::lens({c}, false);
    case MonadTag::Kind::Val: return Element::dirac(c);
    case MonadTag::Kind::Prev: return dirac_prevision(tag.prev_kind, c);
  }
  return c;
}

Element fmap(const MonadTag& tag, const ElementMap& f, const Element& e) {
  SpacePtr out = tag.apply(f.target);
  switch (tag.kind) {
    case MonadTag::Kind::Smyth: return canonicalize(*out, Element::up_set(map_parts(f, e.parts())));
    case MonadTag::Kind::Hoare: return canonicalize(*out, Element::down_set(map_parts(f, e.parts())));
    case MonadTag::Kind::Plotkin:
      return canonicalize(*out, Element::lens(map_parts(f, e.up_parts()), map_parts(f, e.down_parts())));
    case MonadTag::Kind::Val: return canonicalize(*out, push_forward(f, e));
    case MonadTag::Kind::Prev: {
      auto push_all = [&](const std::vector<Element>& gens) {
        std::vector<Element> res;
        for (const auto& g : gens) res.push_back(push_forward(f, g));
        return res;
      };
      if (e.kind() == NodeKind::Fork) return canonicalize(*out, Element::fork(push_all(e.lower()), push_all(e.upper())));
      return canonicalize(*out, Element::prevision(e.prev_kind(), push_all(e.gens())));
    }
  }
  return e;
}

Element mult(const MonadTag& tag, const SpacePtr& space, const Element& ee) {
  SpacePtr out = tag.apply(space);
  switch (tag.kind) {
    case MonadTag::Kind::Smyth:
    case MonadTag::Kind::Hoare:
    case MonadTag::Kind::Plotkin:
      return extend(tag, identity_map(out), ee);
    case MonadTag::Kind::Val: {
      std::vector<Atom> atoms;
      std::size_t outer = ee.atoms().size();
      if (active_mutation() == Mutation::DropMultTerm && outer > 1) --outer;
      for (std::size_t i = 0; i < outer; ++i) {
        const auto& a = ee.atoms()[i];
        for (const auto& b : a.child.atoms()) atoms.push_back(Atom{Rational(a.weight * b.weight), b.child});
      }
      return canonicalize(*out, Element::valuation(std::move(atoms)));
    }
    case MonadTag::Kind::Prev:
      return combined_mult(Case{tag.prev_kind, tag.flavor}, space, ee);
  }
  return ee;
}

Element extend(const MonadTag& tag, const ElementMap& f, const Element& e) {
  switch (tag.kind) {
    case MonadTag::Kind::Smyth:
      return canonicalize(*f.target, Element::up_set(extend_parts(f, e.parts(), Side::Up)));
    case MonadTag::Kind::Hoare:
      return canonicalize(*f.target, Element::down_set(extend_parts(f, e.parts(), Side::Down)));
    case MonadTag::Kind::Plotkin:
      return canonicalize(*f.target, Element::lens(extend_parts(f, e.up_parts(), Side::Up),
                                                   extend_parts(f, e.down_parts(), Side::Down)));
    case MonadTag::Kind::Val:
    case MonadTag::Kind::Prev:
      return mult(tag, f.target->child(), fmap(tag, f, e));
  }
  return e;
}

ElementMap unit_map(const MonadTag& tag, const SpacePtr& space) {
  return ElementMap{space, tag.apply(space), [tag, space](const Element& x) { return unit(tag, space, x); },
                    tag.is_hyperspace(), "unit"};
}

ElementMap mult_map(const MonadTag& tag, const SpacePtr& space) {
  SpacePtr once = tag.apply(space);
  bool affine = tag.kind == MonadTag::Kind::Val || tag.kind == MonadTag::Kind::Prev;
  return ElementMap{tag.apply(once), once, [tag, space](const Element& ee) { return mult(tag, space, ee); }, affine,
                    "mult"};
}

ElementMap fmap_map(const MonadTag& tag, const ElementMap& f) {
  bool affine = tag.kind == MonadTag::Kind::Val || tag.kind == MonadTag::Kind::Prev;
  return ElementMap{tag.apply(f.source), tag.apply(f.target), [tag, f](const Element& e) { return fmap(tag, f, e); },
                    affine, "fmap(" + f.name + ")"};
}

Element lens_upper_part(const Element& lens) { return Element::up_set(lens.up_parts()); }
Element lens_lower_part(const Element& lens) { return Element::down_set(lens.down_parts()); }

Element fork_lower(const Element& fork) {
  if (fork.kind() == NodeKind::Prevision) return Element::prevision(PrevKind::DN, fork.gens());
  return Element::prevision(PrevKind::DN, fork.lower());
}

Element fork_upper(const Element& fork) {
  if (fork.kind() == NodeKind::Prevision) return Element::prevision(PrevKind::AN, fork.gens());
  return Element::prevision(PrevKind::AN, fork.upper());
}

ExtRational prevision_mult_eval(const Element& ff, const PointFunction& h) {
  return evaluate_prevision(ff, [&](const Element& f) { return evaluate_prevision(f, h); });
}

std::pair<ExtRational, ExtRational> fork_mult_eval(const Element& ff, const PointFunction& h) {
  auto lo = evaluate_prevision(fork_lower(ff), [&](const Element& f) { return evaluate_prevision(fork_lower(f), h); });
  auto hi = evaluate_prevision(fork_upper(ff), [&](const Element& f) { return evaluate_prevision(fork_upper(f), h); });
  return {lo, hi};
}

}  // namespace monadforge
