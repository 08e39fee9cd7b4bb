#include <map>

#include "monadforge/order.hpp"
#include "oracle_cache.hpp"

namespace monadforge::lp {

namespace {

struct LinExpr {
  std::vector<Term> terms;
  Rational constant = 0;
};

// A valuation whose weights are affine expressions in LP variables.
class LinMeasure {
 public:
  void add(const Element& atom, int var, const Rational& coef) {
    if (sgn(coef) == 0) return;
    slot(atom).terms.push_back(Term{var, coef});
  }
  void add_constant(const Element& atom, const Rational& w) {
    if (sgn(w) == 0) return;
    slot(atom).constant += w;
  }
  void add_valuation(const Element& v, int var) {
    for (const auto& a : v.atoms()) add(a.child, var, a.weight);
  }
  void add_valuation(const Element& v, const Rational& scale) {
    for (const auto& a : v.atoms()) add_constant(a.child, Rational(scale * a.weight));
  }
  std::size_t size() const { return atoms_.size(); }
  const Element& atom(std::size_t i) const { return atoms_[i]; }
  const LinExpr& mass(std::size_t i) const { return mass_[i]; }

 private:
  LinExpr& slot(const Element& atom) {
    auto [it, fresh] = index_.emplace(atom.key(), atoms_.size());
    if (fresh) {
      atoms_.push_back(atom);
      mass_.emplace_back();
    }
    return mass_[it->second];
  }
  std::map<std::string, std::size_t> index_;
  std::vector<Element> atoms_;
  std::vector<LinExpr> mass_;
};

// Partial transport from lo to hi along the order of `child`: every atom of
// lo ships all its mass to atoms above it, no atom of hi receives more than
// it holds.
void add_transport(LinearFeasibilityProblem& prob, const Space& child, const LinMeasure& lo,
                   const LinMeasure& hi) {
  std::vector<std::vector<Term>> row(lo.size()), col(hi.size());
  for (std::size_t p = 0; p < lo.size(); ++p) {
    for (std::size_t q = 0; q < hi.size(); ++q) {
      if (!leq_elements(child, lo.atom(p), hi.atom(q))) continue;
      int g = prob.add_variable("g" + std::to_string(p) + "_" + std::to_string(q));
      row[p].push_back(Term{g, 1});
      col[q].push_back(Term{g, 1});
    }
  }
  for (std::size_t p = 0; p < lo.size(); ++p) {
    auto terms = row[p];
    for (const auto& t : lo.mass(p).terms) terms.push_back(Term{t.var, Rational(-t.coef)});
    prob.add_eq(std::move(terms), lo.mass(p).constant);
  }
  for (std::size_t q = 0; q < hi.size(); ++q) {
    auto terms = col[q];
    for (const auto& t : hi.mass(q).terms) terms.push_back(Term{t.var, Rational(-t.coef)});
    prob.add_le(std::move(terms), hi.mass(q).constant);
  }
}

std::vector<int> add_simplex_weights(LinearFeasibilityProblem& prob, std::size_t n, const char* prefix) {
  std::vector<int> vars;
  std::vector<Term> sum;
  for (std::size_t j = 0; j < n; ++j) {
    vars.push_back(prob.add_variable(prefix + std::to_string(j)));
    sum.push_back(Term{vars.back(), 1});
  }
  prob.add_eq(std::move(sum), 1);
  return vars;
}

constexpr std::size_t kMaxMixtureCombos = 4096;

// Generator lists of a prevision, viewed in the given kind. A single
// generator is a linear prevision and fits every kind.
struct PrevisionView {
  std::vector<Element> lower;  // superlinear side (min)
  std::vector<Element> upper;  // sublinear side (sup)
};

PrevisionView view_prevision(const Element& f, PrevKind kind) {
  if (f.kind() == NodeKind::Fork) return {f.lower(), f.upper()};
  if (f.kind() != NodeKind::Prevision) throw SpaceError("expected a prevision, got " + f.key());
  if (f.gens().size() == 1 || f.prev_kind() == kind || kind == PrevKind::ADN) {
    if (f.gens().size() == 1) return {f.gens(), f.gens()};
    if (f.prev_kind() == PrevKind::DN) return {f.gens(), {}};
    return {{}, f.gens()};
  }
  throw RepresentationError("prevision kind mismatch: " + f.key() + " in a " + to_string(kind) + " space");
}

std::vector<std::vector<std::size_t>> choice_combos(const std::vector<std::vector<Element>>& lists) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (const auto& l : lists) {
    if (l.empty()) throw RepresentationError("empty generator side in a prevision mixture");
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : out) {
      for (std::size_t k = 0; k < l.size(); ++k) {
        auto d = c;
        d.push_back(k);
        next.push_back(std::move(d));
        if (next.size() > kMaxMixtureCombos) throw RepresentationError("prevision mixture too large");
      }
    }
    out = std::move(next);
  }
  return out;
}

// One side of the pointwise comparison between a fixed prevision x and the
// mixture sum_j w_j F_j with LP weights w. `min_side` selects the
// superlinear (min) representation, otherwise the sublinear (sup) one;
// `x_above` asks for x >= mixture, otherwise x <= mixture.
void add_prevision_side(LinearFeasibilityProblem& prob, const Space& base_child, const std::vector<int>& w,
                        const std::vector<std::vector<Element>>& mix_gens, const std::vector<Element>& x_gens,
                        bool min_side, bool x_above) {
  // For min-type previsions x >= M iff every generator of x lies above the
  // hull of M's generators; for sup-type previsions x <= M iff every
  // generator of x lies below that hull. The hull of a mixture is the
  // weighted Minkowski sum of the hulls, parametrized by split weights.
  const bool per_x_gen = (min_side == x_above);
  if (per_x_gen) {
    for (const auto& g : x_gens) {
      LinMeasure mix, target;
      for (std::size_t j = 0; j < mix_gens.size(); ++j) {
        std::vector<Term> split;
        for (std::size_t k = 0; k < mix_gens[j].size(); ++k) {
          int b = prob.add_variable("b" + std::to_string(j) + "_" + std::to_string(k));
          split.push_back(Term{b, 1});
          mix.add_valuation(mix_gens[j][k], b);
        }
        split.push_back(Term{w[j], -1});
        prob.add_eq(std::move(split), 0);
      }
      target.add_valuation(g, Rational(1));
      if (min_side) {
        add_transport(prob, base_child, mix, target);
      } else {
        add_transport(prob, base_child, target, mix);
      }
    }
  } else {
    // Every choice combination of the mixture must lie in the hull of x's
    // generators (above it for min-type, below it for sup-type).
    for (const auto& combo : choice_combos(mix_gens)) {
      LinMeasure mix, hull;
      for (std::size_t j = 0; j < combo.size(); ++j) mix.add_valuation(mix_gens[j][combo[j]], w[j]);
      auto mu = add_simplex_weights(prob, x_gens.size(), "m");
      for (std::size_t m = 0; m < x_gens.size(); ++m) hull.add_valuation(x_gens[m], mu[m]);
      if (min_side) {
        add_transport(prob, base_child, hull, mix);
      } else {
        add_transport(prob, base_child, mix, hull);
      }
    }
  }
}

bool convex_membership(const Space& space, const Element& x, const std::vector<Element>& gens, bool up) {
  if (gens.empty()) return false;
  for (const auto& g : gens) {
    if (g == x) return true;
  }
  if (gens.size() == 1) return up ? leq_elements(space, gens[0], x) : leq_elements(space, x, gens[0]);

  std::string cache_key = std::string(up ? "cu|" : "cd|") + space.key() + "|" + x.key();
  for (const auto& g : gens) {
    cache_key += "|";
    cache_key += g.key();
  }
  if (auto hit = detail::lookup_bool(cache_key)) return *hit;

  LinearFeasibilityProblem prob;
  auto w = add_simplex_weights(prob, gens.size(), "w");
  if (space.kind() == Space::Kind::Val) {
    if (space.flavor() == Flavor::One) {
      for (const auto& g : gens) {
        if (g.mass() != x.mass()) throw SpaceError("flavor mismatch: mixed total masses in a mass-1 space");
      }
    }
    LinMeasure mix, target;
    for (std::size_t j = 0; j < gens.size(); ++j) mix.add_valuation(gens[j], w[j]);
    target.add_valuation(x, Rational(1));
    if (up) {
      add_transport(prob, *space.child(), mix, target);
    } else {
      add_transport(prob, *space.child(), target, mix);
    }
  } else if (space.kind() == Space::Kind::Prev) {
    const PrevKind kind = space.prev_kind();
    PrevisionView xv = view_prevision(x, kind);
    std::vector<std::vector<Element>> lower, upper;
    for (const auto& g : gens) {
      auto v = view_prevision(g, kind);
      lower.push_back(v.lower);
      upper.push_back(v.upper);
    }
    const Space& child = *space.child();
    if (kind != PrevKind::AN) add_prevision_side(prob, child, w, lower, xv.lower, true, up);
    if (kind != PrevKind::DN) add_prevision_side(prob, child, w, upper, xv.upper, false, up);
  } else {
    throw SpaceError("convex membership over " + space.describe() + ", which has no convex structure");
  }
  bool result = feasible(prob).has_value();
  detail::store_bool(cache_key, result);
  return result;
}

}  // namespace

LinearFeasibilityProblem coupling_problem(const Space& val_space, const Element& a, const Element& b) {
  if (val_space.kind() != Space::Kind::Val) throw SpaceError("stochastic order on " + val_space.describe());
  LinearFeasibilityProblem prob;
  LinMeasure lo, hi;
  lo.add_valuation(a, Rational(1));
  hi.add_valuation(b, Rational(1));
  add_transport(prob, *val_space.child(), lo, hi);
  return prob;
}

bool stochastic_leq(const Space& val_space, const Element& a, const Element& b, StochasticMethod method) {
  if (val_space.kind() != Space::Kind::Val) throw SpaceError("stochastic order on " + val_space.describe());
  if (method == StochasticMethod::Enumerate) {
    if (!val_space.child()->is_base()) {
      throw MethodError("up-set enumeration is only available over a base poset");
    }
    const FinitePoset& p = *val_space.poset();
    std::vector<Rational> wa(static_cast<std::size_t>(p.size())), wb(static_cast<std::size_t>(p.size()));
    for (const auto& at : a.atoms()) wa[static_cast<std::size_t>(at.child.index())] += at.weight;
    for (const auto& at : b.atoms()) wb[static_cast<std::size_t>(at.child.index())] += at.weight;
    for (PointSet u : p.enumerate_upsets()) {
      Rational ma = 0, mb = 0;
      for (int x : members(u)) {
        ma += wa[static_cast<std::size_t>(x)];
        mb += wb[static_cast<std::size_t>(x)];
      }
      if (ma > mb) return false;
    }
    return true;
  }
  if (a == b) return true;
  if (a.mass() > b.mass()) return false;
  return feasible(coupling_problem(val_space, a, b)).has_value();
}

bool convex_up_membership(const Space& space, const Element& x, const std::vector<Element>& gens) {
  return convex_membership(space, x, gens, true);
}

bool convex_down_membership(const Space& space, const Element& x, const std::vector<Element>& gens) {
  return convex_membership(space, x, gens, false);
}

}  // namespace monadforge::lp
