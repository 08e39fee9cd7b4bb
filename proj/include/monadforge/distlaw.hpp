#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monadforge/monads.hpp"

namespace monadforge {

// One of the three hyperspace/prevision pairings over valuations of a
// given flavor: DN pairs Smyth with superlinear previsions, AN pairs Hoare
// with sublinear ones, ADN pairs Plotkin with forks.
struct Case {
  PrevKind kind = PrevKind::DN;
  Flavor flavor = Flavor::One;

  MonadTag S() const;
  MonadTag T() const { return MonadTag::val(flavor); }
  MonadTag U() const { return MonadTag::prev(kind, flavor); }
  SpacePtr s_of(const SpacePtr& x) const { return S().apply(x); }
  SpacePtr t_of(const SpacePtr& x) const { return T().apply(x); }
  SpacePtr u_of(const SpacePtr& x) const { return U().apply(x); }
  SpacePtr st_of(const SpacePtr& x) const { return s_of(t_of(x)); }
  std::string name() const { return to_string(kind); }
};

class LambdaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultChoiceCap = 256;

// Retraction of hyperspaces of valuations onto previsions: the min (DN),
// sup (AN), or both (ADN) over the generators of q in S(T(x)).
Element retraction_r(const Case& c, const SpacePtr& x, const Element& q);
// Section: the convex hull closure of a prevision's generators, in S(T(x)).
Element retraction_s(const Case& c, const SpacePtr& x, const Element& f);
// s after r.
Element e_closure(const Case& c, const SpacePtr& x, const Element& q);

// Hyperspace element of S(x) to the prevision that takes min/sup over it.
// Generator-level: exact for plain parts; for convex parts it agrees with
// the true morphism once followed by prevision multiplication.
Element morphism_i(const Case& c, const SpacePtr& x, const Element& q);
// Valuation of T(x) as a linear prevision.
Element morphism_j(const Case& c, const SpacePtr& x, const Element& nu);

struct LambdaOutput {
  Element value;
  // Choice combinations, one valuation per choice function; for ADN the
  // up-side combinations followed by the down-side ones.
  std::vector<Element> combinations;
};

// Weak distributive law on xi in T(S(x)), by enumerating choice functions
// over the generators of the hyperspace children. Throws LambdaError when
// xi is not a valuation or the number of combinations exceeds `cap`.
LambdaOutput lambda(const Case& c, const SpacePtr& x, const Element& xi, std::size_t cap = kDefaultChoiceCap);
// The same law assembled from the retraction: s after prevision
// multiplication after j after T(i).
Element lambda_via_retraction(const Case& c, const SpacePtr& x, const Element& xi);
// Membership of nu in lambda(xi) decided over the opens of a base poset:
// nu(U) >= xi(boxes in U) for DN, nu(U) <= xi(sets meeting U) for AN, both
// for ADN. Throws LambdaError above base level.
bool lambda_membership_oracle(const Case& c, const SpacePtr& x, const Element& xi, const Element& nu);

// The idempotent assembled from lambda alone: S(mult of T) after lambda at
// T(x) after the unit of T at S(T(x)).
Element e_from_lambda(const Case& c, const SpacePtr& x, const Element& q);

// Composite S T S T x -> S T x: S-extension of (S mult_T after lambda at T x).
Element compose_A(const Case& c, const SpacePtr& x, const Element& q);
// S T U x -> S T x: compose_A after S T s.
Element compose_B(const Case& c, const SpacePtr& x, const Element& q);
// U S T x -> S T x: compose_A after s at S T x.
Element compose_C(const Case& c, const SpacePtr& x, const Element& f);

// Prevision multiplication U U x -> U x, rebuilt from the retraction as
// r after compose_A after (S T s after s).
Element combined_mult(const Case& c, const SpacePtr& x, const Element& ff);

// Element maps for the above, for use with fmap/extend.
ElementMap r_map(const Case& c, const SpacePtr& x);
ElementMap s_map(const Case& c, const SpacePtr& x);
ElementMap e_map(const Case& c, const SpacePtr& x);
ElementMap i_map(const Case& c, const SpacePtr& x);
ElementMap j_map(const Case& c, const SpacePtr& x);
ElementMap lambda_map(const Case& c, const SpacePtr& x);

}  // namespace monadforge
