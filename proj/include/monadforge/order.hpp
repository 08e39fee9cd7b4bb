#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "monadforge/exactlp.hpp"
#include "monadforge/space.hpp"

namespace monadforge {

enum class Direction { Up, Down };

// Specialization order of `space`: pointwise order on points, stochastic
// order on valuations, reverse inclusion on up-sets, inclusion on down-sets,
// Egli-Milner on lenses, pointwise order on previsions and forks.
bool leq_elements(const Space& space, const Element& a, const Element& b);
bool equal_elements(const Space& space, const Element& a, const Element& b);

// Reduced generator lists, merged valuation children, sorted parts.
// Denotation-preserving and idempotent.
Element canonicalize(const Space& space, const Element& e);

// Membership of x (an element of `child`) in the union of parts, each part
// denoting the up-closure (Up) or down-closure (Down) of its generators,
// or of their convex hull when flagged.
bool member(const Space& child, const std::vector<Part>& parts, const Element& x, Direction dir);

// Whether the union `small` is contained in the union `big`. Throws
// RepresentationError when a convex part would have to be covered by
// several parts at once.
bool contains_parts(const Space& child, const std::vector<Part>& big, const std::vector<Part>& small,
                    Direction dir);

// A function on the points of some space, into the extended nonnegative reals.
using PointFunction = std::function<ExtRational(const Element&)>;

ExtRational integrate(const Element& valuation, const PointFunction& h);

// DN: minimum over generators, AN: supremum over generators.
ExtRational evaluate_prevision(const Element& prevision, const PointFunction& h);
// (lower, upper) values of a fork.
std::pair<ExtRational, ExtRational> evaluate_fork(const Element& fork, const PointFunction& h);

PointFunction lift(const LSCFunction& h);

// Integral of a monotone function against a valuation on a base poset,
// computed layer by layer as a sum over the thresholds of h.
ExtRational choquet_integral(const Element& valuation, const LSCFunction& h);

// F-(h+h') <= F-(h) + F+(h') <= F+(h+h') for the fork with the given
// lower and upper generator lists (valuations over the base).
bool walley_check(const std::vector<Element>& lower, const std::vector<Element>& upper, const LSCFunction& h,
                  const LSCFunction& h2);
using Functional = std::function<ExtRational(const LSCFunction&)>;
bool walley_check(const Functional& lower, const Functional& upper, const LSCFunction& h, const LSCFunction& h2);

// Drops the per-thread memo tables used by the order oracles.
void clear_oracle_caches();

namespace lp {

enum class StochasticMethod { Coupling, Enumerate };

class MethodError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stochastic order on a valuation space. Enumerate is only available over a
// base poset; Coupling works at any depth.
bool stochastic_leq(const Space& val_space, const Element& a, const Element& b,
                    StochasticMethod method = StochasticMethod::Coupling);

// x in the up-closure (resp. down-closure) of the convex hull of gens, where
// x and the generators live in `space`, a valuation or prevision layer.
bool convex_up_membership(const Space& space, const Element& x, const std::vector<Element>& gens);
bool convex_down_membership(const Space& space, const Element& x, const std::vector<Element>& gens);

// The coupling system deciding a <= b, exposed for inspection.
LinearFeasibilityProblem coupling_problem(const Space& val_space, const Element& a, const Element& b);

}  // namespace lp

}  // namespace monadforge
