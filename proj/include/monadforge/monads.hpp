#pragma once

#include <functional>
#include <string>
#include <vector>

#include "monadforge/order.hpp"
#include "monadforge/space.hpp"

namespace monadforge {

struct MonadTag {
  enum class Kind { Smyth, Hoare, Plotkin, Val, Prev };
  Kind kind = Kind::Smyth;
  Flavor flavor = Flavor::One;
  PrevKind prev_kind = PrevKind::DN;

  static MonadTag smyth() { return {Kind::Smyth}; }
  static MonadTag hoare() { return {Kind::Hoare}; }
  static MonadTag plotkin() { return {Kind::Plotkin}; }
  static MonadTag val(Flavor f) { return {Kind::Val, f}; }
  static MonadTag prev(PrevKind k, Flavor f) { return {Kind::Prev, f, k}; }

  bool is_hyperspace() const { return kind == Kind::Smyth || kind == Kind::Hoare || kind == Kind::Plotkin; }
  SpacePtr apply(const SpacePtr& space) const;
  // "SMYTH", "HOARE", "PLOTKIN", "VAL(one)", "PREV(DN,one)".
  std::string name() const;
};

// A map between spaces given by a rule on elements. `affine` marks rules
// that commute with convex combinations, which is what allows applying them
// to the generators of convex-flagged parts.
struct ElementMap {
  SpacePtr source;
  SpacePtr target;
  std::function<Element(const Element&)> rule;
  bool affine = false;
  std::string name;

  Element operator()(const Element& e) const { return rule(e); }
};

class KleisliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A map out of a base space given by its table of values, one per point.
ElementMap tabled_map(const SpacePtr& source, const SpacePtr& target, std::vector<Element> table,
                      std::string name = "table");
ElementMap monotone_map(const SpacePtr& source, const SpacePtr& target, const MonotoneMap& f);
ElementMap identity_map(const SpacePtr& space);
ElementMap compose(const ElementMap& g, const ElementMap& f);  // g after f

// Samples comparable pairs of the table's domain and checks the rule is
// monotone on them.
bool is_monotone_on_base(const ElementMap& f);

Element unit(const MonadTag& tag, const SpacePtr& space, const Element& x);
// Functor action; the result lives in tag.apply(f.target).
Element fmap(const MonadTag& tag, const ElementMap& f, const Element& e);
// `space` is the inner space Y; ee lives in tag(tag(Y)).
Element mult(const MonadTag& tag, const SpacePtr& space, const Element& ee);
// Kleisli extension of f: Y -> tag(Z), applied to e in tag(Y).
Element extend(const MonadTag& tag, const ElementMap& f, const Element& e);

ElementMap unit_map(const MonadTag& tag, const SpacePtr& space);
ElementMap mult_map(const MonadTag& tag, const SpacePtr& space);
ElementMap fmap_map(const MonadTag& tag, const ElementMap& f);

// Up-part (resp. down-part) of a lens as an up-set (down-set).
Element lens_upper_part(const Element& lens);
Element lens_lower_part(const Element& lens);
// Superlinear (resp. sublinear) component of a fork.
Element fork_lower(const Element& fork);
Element fork_upper(const Element& fork);

// Evaluation of prevision multiplication straight from the functional
// definition: the outer prevision applied to F |-> F(h).
ExtRational prevision_mult_eval(const Element& ff, const PointFunction& h);
// Same for forks: (lower, upper).
std::pair<ExtRational, ExtRational> fork_mult_eval(const Element& ff, const PointFunction& h);

}  // namespace monadforge
