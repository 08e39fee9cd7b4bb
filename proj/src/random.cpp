#include "monadforge/random.hpp"

#include <algorithm>

#include "monadforge/order.hpp"

namespace monadforge {

namespace {

GenBudget shrink(const GenBudget& b) {
  return GenBudget{std::max(1, b.max_generators - 1), std::max(1, b.max_atoms - 1), b.max_denominator};
}

// Splits `total` units into `k` positive parts.
std::vector<int> composition(int total, int k, Rng& rng) {
  std::vector<int> cuts;
  std::vector<int> pool;
  for (int i = 1; i < total; ++i) pool.push_back(i);
  for (int i = 0; i < k - 1; ++i) {
    int pick = rng.below(static_cast<int>(pool.size()));
    cuts.push_back(pool[static_cast<std::size_t>(pick)]);
    pool.erase(pool.begin() + pick);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> parts;
  int prev = 0;
  for (int c : cuts) {
    parts.push_back(c - prev);
    prev = c;
  }
  parts.push_back(total - prev);
  return parts;
}

std::vector<Element> random_gens(const Space& child, Rng& rng, const GenBudget& budget) {
  int m = rng.between(1, budget.max_generators);
  std::vector<Element> gens;
  if (child.is_base()) {
    PointSet chosen = 0;
    const int n = child.poset()->size();
    for (int i = 0; i < m; ++i) chosen |= singleton(rng.below(n));
    for (int x : members(chosen)) gens.push_back(Element::point(x));
    return gens;
  }
  for (int i = 0; i < m; ++i) gens.push_back(random_element(child, rng, shrink(budget)));
  return gens;
}

}  // namespace

Element random_valuation(const Space& child, Flavor flavor, Rng& rng, const GenBudget& budget) {
  int k = rng.between(1, budget.max_atoms);
  int den = rng.between(std::max(k, 1), std::max(k, budget.max_denominator));
  int total = den;
  if (flavor == Flavor::Sub1) total = rng.between(k, den);
  if (flavor == Flavor::All) total = rng.between(k, 2 * den);
  auto units = composition(total, k, rng);
  std::vector<Atom> atoms;
  for (int i = 0; i < k; ++i) {
    Element c = child.is_base() ? Element::point(rng.below(child.poset()->size()))
                                : random_element(child, rng, shrink(budget));
    atoms.push_back(Atom{make_rational(units[static_cast<std::size_t>(i)], den), c});
  }
  return Element::valuation(std::move(atoms));
}

Element random_element(const Space& space, Rng& rng, const GenBudget& budget) {
  Element raw = Element::point(0);
  switch (space.kind()) {
    case Space::Kind::Base:
      return Element::point(rng.below(space.poset()->size()));
    case Space::Kind::Val:
      raw = random_valuation(*space.child(), space.flavor(), rng, budget);
      break;
    case Space::Kind::Smyth:
    case Space::Kind::Hoare:
    case Space::Kind::Plotkin: {
      auto gens = random_gens(*space.child(), rng, budget);
      bool convex = space.child()->has_convex_structure() && rng.chance(1, 2);
      if (space.kind() == Space::Kind::Smyth) raw = Element::up_set(std::move(gens), convex);
      if (space.kind() == Space::Kind::Hoare) raw = Element::down_set(std::move(gens), convex);
      if (space.kind() == Space::Kind::Plotkin) raw = Element::lens(std::move(gens), convex);
      break;
    }
    case Space::Kind::Prev: {
      int m = rng.between(1, budget.max_generators);
      std::vector<Element> gens;
      for (int i = 0; i < m; ++i) gens.push_back(random_valuation(*space.child(), space.flavor(), rng, budget));
      raw = space.prev_kind() == PrevKind::ADN ? Element::fork(gens, gens)
                                               : Element::prevision(space.prev_kind(), std::move(gens));
      break;
    }
  }
  return canonicalize(space, raw);
}

Element random_element(const Space& space, std::uint64_t seed, int size_budget) {
  Rng rng(seed);
  GenBudget b;
  b.max_generators = std::max(1, size_budget);
  b.max_atoms = std::max(1, size_budget);
  return random_element(space, rng, b);
}

LSCFunction random_lsc(const PosetPtr& poset, Rng& rng) {
  const int n = poset->size();
  std::vector<Rational> values(static_cast<std::size_t>(n), Rational(0));
  int terms = rng.between(1, 3);
  for (int t = 0; t < terms; ++t) {
    PointSet u = poset->up_of(rng.below(n));
    if (rng.chance(1, 3)) u = poset->up_closure(u | singleton(rng.below(n)));
    Rational c = make_rational(rng.between(1, 6), rng.between(1, 3));
    for (int x : members(u)) values[static_cast<std::size_t>(x)] += c;
  }
  std::vector<ExtRational> ext;
  for (auto& v : values) ext.emplace_back(v);
  return LSCFunction(poset, std::move(ext));
}

std::vector<int> random_monotone_assignment(const FinitePoset& src, const FinitePoset& dst, Rng& rng) {
  auto order = src.linear_extension();
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<int> f(static_cast<std::size_t>(src.size()), -1);
    bool ok = true;
    for (int x : order) {
      PointSet allowed = dst.all();
      for (int y : members(src.down_of(x))) {
        if (y != x) allowed &= dst.up_of(f[static_cast<std::size_t>(y)]);
      }
      if (allowed == 0) {
        ok = false;
        break;
      }
      auto cands = members(allowed);
      f[static_cast<std::size_t>(x)] = cands[static_cast<std::size_t>(rng.below(static_cast<int>(cands.size())))];
    }
    if (ok) return f;
  }
  return std::vector<int>(static_cast<std::size_t>(src.size()), rng.below(dst.size()));
}

PosetPtr random_base(Rng& rng, int max_size) {
  int n = rng.between(1, std::max(1, max_size));
  int shape = rng.below(4);
  PosetKind kind = shape == 0 ? PosetKind::Chain : shape == 1 ? PosetKind::Antichain
                   : shape == 2 && n >= 2 ? PosetKind::Diamond : PosetKind::Random;
  return std::make_shared<const FinitePoset>(standard_poset(kind, n, rng.next(), make_rational(1, 2)));
}

}  // namespace monadforge
