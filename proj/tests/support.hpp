#pragma once

#include <memory>
#include <string>
#include <vector>

#include "monadforge/distlaw.hpp"
#include "monadforge/json_io.hpp"
#include "monadforge/monads.hpp"
#include "monadforge/order.hpp"
#include "monadforge/space.hpp"

namespace testing {

using namespace monadforge;

inline PosetPtr poset_of(PosetKind kind, int n) { return std::make_shared<const FinitePoset>(standard_poset(kind, n)); }
inline SpacePtr chain(int n) { return Space::base(poset_of(PosetKind::Chain, n)); }
inline SpacePtr antichain(int n) { return Space::base(poset_of(PosetKind::Antichain, n)); }

inline Element pt(int i) { return Element::point(i); }
inline Element dirac_pt(int i) { return Element::dirac(pt(i)); }
inline Rational q(long n, long d = 1) { return make_rational(n, d); }

// Valuation over base points from (weight, index) pairs.
inline Element val(std::vector<std::pair<Rational, int>> atoms) {
  std::vector<Atom> out;
  for (auto& [w, i] : atoms) out.push_back(Atom{w, pt(i)});
  return Element::valuation(std::move(out));
}

inline std::vector<Element> pts(std::vector<int> idx) {
  std::vector<Element> out;
  for (int i : idx) out.push_back(pt(i));
  return out;
}

// Brute-force up-sets by filtering the powerset; independent of the
// library's enumeration.
inline std::vector<PointSet> powerset_upsets(const FinitePoset& p) {
  std::vector<PointSet> out;
  for (PointSet s = 0; s < (PointSet{1} << p.size()); ++s) {
    bool up = true;
    for (int x = 0; x < p.size() && up; ++x) {
      if (!contains(s, x)) continue;
      for (int y = 0; y < p.size(); ++y) {
        if (p.leq(x, y) && !contains(s, y)) up = false;
      }
    }
    if (up) out.push_back(s);
  }
  return out;
}

inline Rational mass_on(const Element& v, PointSet u) {
  Rational m = 0;
  for (const auto& a : v.atoms()) {
    if (contains(u, a.child.index())) m += a.weight;
  }
  return m;
}

// nu1 <= nu2 in the stochastic order, by brute force over all up-sets.
inline bool brute_stochastic_leq(const FinitePoset& p, const Element& a, const Element& b) {
  for (PointSet u : powerset_upsets(p)) {
    if (mass_on(a, u) > mass_on(b, u)) return false;
  }
  return true;
}

inline PointFunction values(std::vector<long> vs) {
  return [vs](const Element& x) { return ExtRational(make_rational(vs.at(static_cast<std::size_t>(x.index())))); };
}

}  // namespace testing
