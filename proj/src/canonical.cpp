#include <algorithm>

#include "monadforge/order.hpp"
#include "oracle_cache.hpp"

namespace monadforge {

namespace {

void sort_by_key(std::vector<Element>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool leq_or(const Space& space, const Element& a, const Element& b, bool undecided) {
  try {
    return leq_elements(space, a, b);
  } catch (const RepresentationError&) {
    return undecided;
  }
}

// Keeps the minimal (Up) or maximal (Down) generators, one per class of
// equal ones.
std::vector<Element> reduce_plain(const Space& child, std::vector<Element> gens, Direction dir) {
  sort_by_key(gens);
  std::vector<Element> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      const Element& g = gens[i];
      const Element& o = gens[j];
      // An undecidable comparison keeps both generators.
      bool o_beats = dir == Direction::Up ? leq_or(child, o, g, false) : leq_or(child, g, o, false);
      if (!o_beats) continue;
      bool tie = dir == Direction::Up ? leq_or(child, g, o, true) : leq_or(child, o, g, true);
      // Among equal generators keep the first by key.
      redundant = !tie || j < i;
    }
    if (!redundant) kept.push_back(gens[i]);
  }
  return kept;
}

// Drops generators lying in the convex hull closure of the others.
std::vector<Element> reduce_convex(const Space& child, std::vector<Element> gens, Direction dir) {
  gens = reduce_plain(child, std::move(gens), dir);
  for (std::size_t i = 0; i < gens.size() && gens.size() > 1;) {
    std::vector<Element> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    bool inside = dir == Direction::Up ? lp::convex_up_membership(child, gens[i], others)
                                       : lp::convex_down_membership(child, gens[i], others);
    if (inside) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return gens;
}

bool part_inside(const Space& child, const Part& p, const Part& q, Direction dir) {
  if (q.convex) {
    return std::all_of(p.gens.begin(), p.gens.end(), [&](const Element& g) { return member(child, {q}, g, dir); });
  }
  // Inside a single principal closure of q.
  for (const auto& d : q.gens) {
    bool all = std::all_of(p.gens.begin(), p.gens.end(), [&](const Element& g) {
      return dir == Direction::Up ? leq_or(child, d, g, false) : leq_or(child, g, d, false);
    });
    if (all) return true;
  }
  return false;
}

std::string part_key(const Part& p) {
  std::string k = p.convex ? "c" : "p";
  for (const auto& g : p.gens) k += "," + g.key();
  return k;
}

std::vector<Part> canonical_parts(const Space& child, const std::vector<Part>& parts, Direction dir) {
  const bool cone = child.has_convex_structure();
  std::vector<Element> plain;
  std::vector<Part> convex;
  for (const auto& p : parts) {
    std::vector<Element> gens;
    for (const auto& g : p.gens) gens.push_back(canonicalize(child, g));
    if (p.convex && cone) {
      gens = reduce_convex(child, std::move(gens), dir);
      if (gens.size() > 1) {
        convex.push_back(Part{std::move(gens), true});
        continue;
      }
    }
    plain.insert(plain.end(), gens.begin(), gens.end());
  }
  if (!plain.empty()) plain = reduce_plain(child, std::move(plain), dir);
  if (!convex.empty() && !plain.empty()) {
    std::vector<Element> rest;
    for (const auto& g : plain) {
      if (!member(child, convex, g, dir)) rest.push_back(g);
    }
    plain = std::move(rest);
  }
  // Drop convex parts inside another part; among equal parts keep the first.
  std::sort(convex.begin(), convex.end(),
            [](const Part& a, const Part& b) { return part_key(a) < part_key(b); });
  std::vector<Part> kept_convex;
  for (std::size_t i = 0; i < convex.size(); ++i) {
    bool redundant = false;
    if (!plain.empty() && part_inside(child, convex[i], Part{plain, false}, dir)) redundant = true;
    for (std::size_t j = 0; j < convex.size() && !redundant; ++j) {
      if (i == j || !part_inside(child, convex[i], convex[j], dir)) continue;
      redundant = !part_inside(child, convex[j], convex[i], dir) || j < i;
    }
    if (!redundant) kept_convex.push_back(convex[i]);
  }
  std::vector<Part> out;
  if (!plain.empty()) out.push_back(Part{std::move(plain), false});
  for (auto& p : kept_convex) out.push_back(std::move(p));
  return out;
}

Element canonical_valuation(const Space& space, const Element& v) {
  const Space& child = *space.child();
  std::vector<Atom> merged;
  for (const auto& a : v.atoms()) {
    if (sgn(a.weight) == 0) continue;
    Element c = canonicalize(child, a.child);
    bool done = false;
    for (auto& m : merged) {
      // Atoms whose equality is undecidable stay separate.
      if (m.child == c || (leq_or(child, m.child, c, false) && leq_or(child, c, m.child, false))) {
        m.weight += a.weight;
        done = true;
        break;
      }
    }
    if (!done) merged.push_back(Atom{a.weight, c});
  }
  std::sort(merged.begin(), merged.end(), [](const Atom& a, const Atom& b) { return a.child < b.child; });
  return Element::valuation(std::move(merged));
}

Element canonical_uncached(const Space& space, const Element& e) {
  switch (space.kind()) {
    case Space::Kind::Base:
      return e;
    case Space::Kind::Val:
      return canonical_valuation(space, e);
    case Space::Kind::Smyth:
      return Element::up_set(canonical_parts(*space.child(), e.parts(), Direction::Up));
    case Space::Kind::Hoare:
      return Element::down_set(canonical_parts(*space.child(), e.parts(), Direction::Down));
    case Space::Kind::Plotkin:
      return Element::lens(canonical_parts(*space.child(), e.up_parts(), Direction::Up),
                           canonical_parts(*space.child(), e.down_parts(), Direction::Down));
    case Space::Kind::Prev: {
      auto gen_space = space.generator_space();
      auto canon_all = [&](const std::vector<Element>& gens) {
        std::vector<Element> out;
        for (const auto& g : gens) out.push_back(canonicalize(*gen_space, g));
        return out;
      };
      if (e.kind() == NodeKind::Fork) {
        auto lower = reduce_convex(*gen_space, canon_all(e.lower()), Direction::Up);
        auto upper = reduce_convex(*gen_space, canon_all(e.upper()), Direction::Down);
        return Element::fork(std::move(lower), std::move(upper));
      }
      Direction dir = e.prev_kind() == PrevKind::DN ? Direction::Up : Direction::Down;
      return Element::prevision(e.prev_kind(), reduce_convex(*gen_space, canon_all(e.gens()), dir));
    }
  }
  return e;
}

}  // namespace

Element canonicalize(const Space& space, const Element& e) {
  if (space.kind() == Space::Kind::Base) return e;
  std::string key = space.key() + "|" + e.key();
  if (const Element* hit = detail::lookup_element(key)) return *hit;
  Element out = canonical_uncached(space, e);
  detail::store_element(key, out);
  detail::store_element(space.key() + "|" + out.key(), out);
  return out;
}

}  // namespace monadforge
