#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monadforge/rational.hpp"

namespace monadforge::lp {

class LpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Sense { Eq, Le, Ge };

struct Term {
  int var;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;
  Sense sense;
  Rational rhs;
};

class LinearFeasibilityProblem {
 public:
  int add_variable(std::string name = {}, bool nonnegative = true);
  // Throws LpError when a term names a variable that does not exist.
  void add_constraint(std::vector<Term> terms, Sense sense, Rational rhs);
  void add_eq(std::vector<Term> terms, Rational rhs) { add_constraint(std::move(terms), Sense::Eq, std::move(rhs)); }
  void add_le(std::vector<Term> terms, Rational rhs) { add_constraint(std::move(terms), Sense::Le, std::move(rhs)); }
  void add_ge(std::vector<Term> terms, Rational rhs) { add_constraint(std::move(terms), Sense::Ge, std::move(rhs)); }

  int variable_count() const { return static_cast<int>(names_.size()); }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool nonnegative(int var) const { return nonneg_.at(static_cast<std::size_t>(var)); }
  const std::string& name(int var) const { return names_.at(static_cast<std::size_t>(var)); }

  bool satisfied_by(const std::vector<Rational>& assignment) const;

  // Plain-text listing: one "var" line per variable, one line per constraint.
  std::string dump() const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> nonneg_;
  std::vector<Constraint> constraints_;
};

// Exact phase-one simplex with Bland's rule. A returned witness has been
// re-checked against every constraint by substitution.
std::optional<std::vector<Rational>> feasible(const LinearFeasibilityProblem& prob);

}  // namespace monadforge::lp
