#include <algorithm>

#include "monadforge/order.hpp"
#include "oracle_cache.hpp"

namespace monadforge {

namespace {

bool in_part(const Space& child, const Part& part, const Element& x, Direction dir) {
  if (part.convex && part.gens.size() > 1) {
    return dir == Direction::Up ? lp::convex_up_membership(child, x, part.gens)
                                : lp::convex_down_membership(child, x, part.gens);
  }
  for (const auto& g : part.gens) {
    if (dir == Direction::Up ? leq_elements(child, g, x) : leq_elements(child, x, g)) return true;
  }
  return false;
}

std::vector<Atom> scaled(const Rational& w, const Element& v) {
  std::vector<Atom> out;
  for (const auto& a : v.atoms()) out.push_back(Atom{Rational(w * a.weight), a.child});
  return out;
}

Element mix_valuations(const Element& a, const Element& b, const Rational& w) {
  auto atoms = scaled(w, a);
  auto rest = scaled(1 - w, b);
  atoms.insert(atoms.end(), rest.begin(), rest.end());
  return Element::valuation(std::move(atoms));
}

std::vector<Element> minkowski(const std::vector<Element>& as, const std::vector<Element>& bs, const Rational& w) {
  std::vector<Element> out;
  for (const auto& a : as) {
    for (const auto& b : bs) out.push_back(mix_valuations(a, b, w));
  }
  return out;
}

// w*a + (1-w)*b in a space with convex structure.
Element mixture(const Space& child, const Element& a, const Element& b, const Rational& w) {
  if (child.kind() == Space::Kind::Val) return canonicalize(child, mix_valuations(a, b, w));
  if (child.prev_kind() == PrevKind::ADN) {
    auto lo = [](const Element& f) { return f.kind() == NodeKind::Fork ? f.lower() : f.gens(); };
    auto hi = [](const Element& f) { return f.kind() == NodeKind::Fork ? f.upper() : f.gens(); };
    return canonicalize(child, Element::fork(minkowski(lo(a), lo(b), w), minkowski(hi(a), hi(b), w)));
  }
  return canonicalize(child, Element::prevision(child.prev_kind(), minkowski(a.gens(), b.gens(), w)));
}

bool part_within(const Space& child, const Part& p, const std::vector<Part>& big, Direction dir) {
  if (!p.convex || p.gens.size() == 1) {
    return std::all_of(p.gens.begin(), p.gens.end(),
                       [&](const Element& g) { return member(child, big, g, dir); });
  }
  for (const auto& q : big) {
    bool single_piece = q.convex || q.gens.size() == 1;
    if (single_piece && std::all_of(p.gens.begin(), p.gens.end(),
                                    [&](const Element& g) { return in_part(child, q, g, dir); })) {
      return true;
    }
  }
  // Inside one principal closure of a plain part.
  for (const auto& q : big) {
    if (q.convex) continue;
    for (const auto& d : q.gens) {
      if (std::all_of(p.gens.begin(), p.gens.end(), [&](const Element& g) {
            return dir == Direction::Up ? leq_elements(child, d, g) : leq_elements(child, g, d);
          })) {
        return true;
      }
    }
  }
  for (const auto& g : p.gens) {
    if (!member(child, big, g, dir)) return false;
  }
  // Look for a separating point among mixtures of pairs of generators.
  for (std::size_t i = 0; i < p.gens.size(); ++i) {
    for (std::size_t k = i + 1; k < p.gens.size(); ++k) {
      for (int w = 1; w < 4; ++w) {
        Element probe = mixture(child, p.gens[i], p.gens[k], make_rational(w, 4));
        if (!member(child, big, probe, dir)) return false;
      }
    }
  }
  // Every generator is covered but no single convex piece covers them all:
  // deciding whether the hull is covered by the union is a covering problem.
  throw RepresentationError("undecidable-representation: convex part covered only by a union of parts");
}

// Previsions of a given kind expressed as (lower, upper) generator lists.
struct Sides {
  std::vector<Element> lower;
  std::vector<Element> upper;
};

Sides sides(const Element& f, PrevKind kind) {
  if (f.kind() == NodeKind::Fork) return {f.lower(), f.upper()};
  if (f.kind() != NodeKind::Prevision) throw SpaceError("expected a prevision, got " + f.key());
  if (f.gens().size() == 1) return {f.gens(), f.gens()};
  if (f.prev_kind() != kind) {
    throw RepresentationError("prevision kind mismatch: " + f.key() + " in a " + to_string(kind) + " space");
  }
  if (kind == PrevKind::DN) return {f.gens(), {}};
  return {{}, f.gens()};
}

bool prevision_leq(const Space& space, const Element& a, const Element& b) {
  const PrevKind kind = space.prev_kind();
  auto gen_space = space.generator_space();
  Sides sa = sides(a, kind), sb = sides(b, kind);
  if (kind == PrevKind::ADN && (a.kind() != NodeKind::Fork || b.kind() != NodeKind::Fork)) {
    if (a.kind() == NodeKind::Prevision && a.gens().size() > 1) throw RepresentationError("non-fork in ADN space");
    if (b.kind() == NodeKind::Prevision && b.gens().size() > 1) throw RepresentationError("non-fork in ADN space");
  }
  if (kind != PrevKind::AN) {
    for (const auto& g : sb.lower) {
      if (!lp::convex_up_membership(*gen_space, g, sa.lower)) return false;
    }
  }
  if (kind != PrevKind::DN) {
    for (const auto& g : sa.upper) {
      if (!lp::convex_down_membership(*gen_space, g, sb.upper)) return false;
    }
  }
  return true;
}

bool leq_uncached(const Space& space, const Element& a, const Element& b) {
  switch (space.kind()) {
    case Space::Kind::Base:
      return space.poset()->leq(a.index(), b.index());
    case Space::Kind::Val:
      return lp::stochastic_leq(space, a, b);
    case Space::Kind::Smyth:
      return contains_parts(*space.child(), a.parts(), b.parts(), Direction::Up);
    case Space::Kind::Hoare:
      return contains_parts(*space.child(), b.parts(), a.parts(), Direction::Down);
    case Space::Kind::Plotkin:
      return contains_parts(*space.child(), a.up_parts(), b.up_parts(), Direction::Up) &&
             contains_parts(*space.child(), b.down_parts(), a.down_parts(), Direction::Down);
    case Space::Kind::Prev:
      return prevision_leq(space, a, b);
  }
  return false;
}

}  // namespace

bool member(const Space& child, const std::vector<Part>& parts, const Element& x, Direction dir) {
  return std::any_of(parts.begin(), parts.end(), [&](const Part& p) { return in_part(child, p, x, dir); });
}

bool contains_parts(const Space& child, const std::vector<Part>& big, const std::vector<Part>& small,
                    Direction dir) {
  return std::all_of(small.begin(), small.end(),
                     [&](const Part& p) { return part_within(child, p, big, dir); });
}

bool leq_elements(const Space& space, const Element& a, const Element& b) {
  if (a == b) return true;
  if (space.kind() == Space::Kind::Base) return space.poset()->leq(a.index(), b.index());
  std::string key = "le|" + space.key() + "|" + a.key() + "|" + b.key();
  if (auto hit = detail::lookup_bool(key)) return *hit;
  bool result = leq_uncached(space, a, b);
  detail::store_bool(key, result);
  return result;
}

bool equal_elements(const Space& space, const Element& a, const Element& b) {
  if (a == b) return true;
  return leq_elements(space, a, b) && leq_elements(space, b, a);
}

void clear_oracle_caches() {
  detail::bool_cache().clear();
  detail::element_cache().clear();
}

// ---------------------------------------------------------------------------
// Evaluation.

ExtRational integrate(const Element& valuation, const PointFunction& h) {
  ExtRational total;
  for (const auto& a : valuation.atoms()) total = total + a.weight * h(a.child);
  return total;
}

ExtRational evaluate_prevision(const Element& prevision, const PointFunction& h) {
  if (prevision.kind() == NodeKind::Fork) {
    throw SpaceError("evaluate_prevision on a fork; use evaluate_fork");
  }
  const auto& gens = prevision.gens();
  ExtRational best = integrate(gens.front(), h);
  for (std::size_t i = 1; i < gens.size(); ++i) {
    ExtRational v = integrate(gens[i], h);
    best = prevision.prev_kind() == PrevKind::DN ? min(best, v) : max(best, v);
  }
  return best;
}

std::pair<ExtRational, ExtRational> evaluate_fork(const Element& fork, const PointFunction& h) {
  return {evaluate_prevision(Element::prevision(PrevKind::DN, fork.lower()), h),
          evaluate_prevision(Element::prevision(PrevKind::AN, fork.upper()), h)};
}

PointFunction lift(const LSCFunction& h) {
  return [h](const Element& x) { return h(x.index()); };
}

ExtRational choquet_integral(const Element& valuation, const LSCFunction& h) {
  const FinitePoset& p = *h.domain();
  std::vector<Rational> w(static_cast<std::size_t>(p.size()));
  for (const auto& a : valuation.atoms()) w[static_cast<std::size_t>(a.child.index())] += a.weight;
  std::vector<ExtRational> levels(h.values());
  levels.emplace_back(0L);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  ExtRational total;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    Rational mass = 0;  // mass of the strict upper level set {h > levels[k-1]}
    for (int x = 0; x < p.size(); ++x) {
      if (levels[k - 1] < h(x)) mass += w[static_cast<std::size_t>(x)];
    }
    if (levels[k].is_infinite()) {
      total = total + mass * ExtRational::infinity();
    } else {
      total = total + ExtRational(Rational(mass * (levels[k].value() - levels[k - 1].value())));
    }
  }
  return total;
}

bool walley_check(const std::vector<Element>& lower, const std::vector<Element>& upper, const LSCFunction& h,
                  const LSCFunction& h2) {
  Element fl = Element::prevision(PrevKind::DN, lower);
  Element fu = Element::prevision(PrevKind::AN, upper);
  return walley_check([&](const LSCFunction& f) { return evaluate_prevision(fl, lift(f)); },
                      [&](const LSCFunction& f) { return evaluate_prevision(fu, lift(f)); }, h, h2);
}

bool walley_check(const Functional& fl, const Functional& fu, const LSCFunction& h, const LSCFunction& h2) {
  LSCFunction sum = h + h2;
  ExtRational middle = fl(h) + fu(h2);
  return fl(sum) <= middle && middle <= fu(sum);
}

}  // namespace monadforge
