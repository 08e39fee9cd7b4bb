#include <sstream>

#include "monadforge/exactlp.hpp"

namespace monadforge::lp {

int LinearFeasibilityProblem::add_variable(std::string name, bool nonnegative) {
  if (name.empty()) name = "x" + std::to_string(names_.size());
  names_.push_back(std::move(name));
  nonneg_.push_back(nonnegative);
  return static_cast<int>(names_.size()) - 1;
}

void LinearFeasibilityProblem::add_constraint(std::vector<Term> terms, Sense sense, Rational rhs) {
  for (const auto& t : terms) {
    if (t.var < 0 || t.var >= variable_count()) {
      throw LpError("dimension mismatch: constraint references variable " + std::to_string(t.var) + " of " +
                    std::to_string(variable_count()));
    }
  }
  constraints_.push_back(Constraint{std::move(terms), sense, std::move(rhs)});
}

bool LinearFeasibilityProblem::satisfied_by(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != variable_count()) return false;
  for (int v = 0; v < variable_count(); ++v) {
    if (nonneg_[static_cast<std::size_t>(v)] && x[static_cast<std::size_t>(v)] < 0) return false;
  }
  for (const auto& c : constraints_) {
    Rational lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * x[static_cast<std::size_t>(t.var)];
    switch (c.sense) {
      case Sense::Eq:
        if (lhs != c.rhs) return false;
        break;
      case Sense::Le:
        if (lhs > c.rhs) return false;
        break;
      case Sense::Ge:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

std::string LinearFeasibilityProblem::dump() const {
  std::ostringstream out;
  for (int v = 0; v < variable_count(); ++v) {
    out << "var " << names_[static_cast<std::size_t>(v)] << (nonneg_[static_cast<std::size_t>(v)] ? " >= 0" : " free")
        << "\n";
  }
  int idx = 0;
  for (const auto& c : constraints_) {
    out << "c" << idx++ << ":";
    if (c.terms.empty()) out << " 0";
    bool first = true;
    for (const auto& t : c.terms) {
      out << (first ? " " : " + ") << t.coef.get_str() << "*" << names_[static_cast<std::size_t>(t.var)];
      first = false;
    }
    out << (c.sense == Sense::Eq ? " = " : c.sense == Sense::Le ? " <= " : " >= ") << c.rhs.get_str() << "\n";
  }
  return out.str();
}

namespace {

// Dense tableau over the standard form A y = b, y >= 0, b >= 0.
struct Tableau {
  int rows = 0;
  int cols = 0;  // structural + slack + artificial columns
  std::vector<std::vector<Rational>> a;  // rows x (cols + 1); last column is b
  std::vector<int> basis;

  void pivot(int r, int c) {
    auto& prow = a[static_cast<std::size_t>(r)];
    Rational inv = 1 / prow[static_cast<std::size_t>(c)];
    for (auto& v : prow) {
      if (sgn(v) != 0) v *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& row = a[static_cast<std::size_t>(i)];
      Rational f = row[static_cast<std::size_t>(c)];
      if (sgn(f) == 0) continue;
      for (int j = 0; j <= cols; ++j) {
        const Rational& pv = prow[static_cast<std::size_t>(j)];
        if (sgn(pv) != 0) row[static_cast<std::size_t>(j)] -= f * pv;
      }
    }
    basis[static_cast<std::size_t>(r)] = c;
  }
};

}  // namespace

std::optional<std::vector<Rational>> feasible(const LinearFeasibilityProblem& prob) {
  const int n = prob.variable_count();
  // Column layout: nonnegative variables map to one column, free variables
  // to a (+, -) pair.
  std::vector<int> pos_col(static_cast<std::size_t>(n)), neg_col(static_cast<std::size_t>(n), -1);
  int ncols = 0;
  for (int v = 0; v < n; ++v) {
    pos_col[static_cast<std::size_t>(v)] = ncols++;
    if (!prob.nonnegative(v)) neg_col[static_cast<std::size_t>(v)] = ncols++;
  }
  const auto& cons = prob.constraints();
  const int m = static_cast<int>(cons.size());
  int slack_count = 0;
  for (const auto& c : cons) slack_count += c.sense == Sense::Eq ? 0 : 1;
  const int first_slack = ncols;
  const int first_art = ncols + slack_count;
  const int total = first_art + m;

  Tableau t;
  t.rows = m;
  t.cols = total;
  t.a.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(total + 1)));
  t.basis.assign(static_cast<std::size_t>(m), -1);
  int slack = first_slack;
  std::vector<bool> needs_art(static_cast<std::size_t>(m), true);
  for (int i = 0; i < m; ++i) {
    const auto& c = cons[static_cast<std::size_t>(i)];
    auto& row = t.a[static_cast<std::size_t>(i)];
    for (const auto& term : c.terms) {
      row[static_cast<std::size_t>(pos_col[static_cast<std::size_t>(term.var)])] += term.coef;
      int nc = neg_col[static_cast<std::size_t>(term.var)];
      if (nc >= 0) row[static_cast<std::size_t>(nc)] -= term.coef;
    }
    row[static_cast<std::size_t>(total)] = c.rhs;
    int slack_col = -1;
    if (c.sense != Sense::Eq) {
      slack_col = slack++;
      row[static_cast<std::size_t>(slack_col)] = c.sense == Sense::Le ? 1 : -1;
    }
    if (sgn(row[static_cast<std::size_t>(total)]) < 0) {
      for (auto& v : row) v = -v;
    }
    if (slack_col >= 0 && row[static_cast<std::size_t>(slack_col)] == 1) {
      t.basis[static_cast<std::size_t>(i)] = slack_col;
      needs_art[static_cast<std::size_t>(i)] = false;
    } else {
      row[static_cast<std::size_t>(first_art + i)] = 1;
      t.basis[static_cast<std::size_t>(i)] = first_art + i;
    }
  }

  // Phase-one objective: minimise the sum of artificial variables. Reduced
  // costs are kept as an extra row; obj holds the current objective value.
  std::vector<Rational> reduced(static_cast<std::size_t>(total + 1));
  for (int i = 0; i < m; ++i) {
    if (!needs_art[static_cast<std::size_t>(i)]) continue;
    const auto& row = t.a[static_cast<std::size_t>(i)];
    for (int j = 0; j <= total; ++j) {
      if (j >= first_art) continue;
      reduced[static_cast<std::size_t>(j)] -= row[static_cast<std::size_t>(j)];
    }
    reduced[static_cast<std::size_t>(total)] -= row[static_cast<std::size_t>(total)];
  }
  // reduced[total] holds minus the objective value.
  std::vector<bool> is_basic(static_cast<std::size_t>(total), false);
  for (int b : t.basis) is_basic[static_cast<std::size_t>(b)] = true;

  while (sgn(reduced[static_cast<std::size_t>(total)]) != 0) {
    int enter = -1;
    for (int j = 0; j < total; ++j) {
      if (!is_basic[static_cast<std::size_t>(j)] && sgn(reduced[static_cast<std::size_t>(j)]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return std::nullopt;  // optimum with positive artificial sum
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      const Rational& coef = t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      if (sgn(coef) <= 0) continue;
      Rational ratio = t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(total)] / coef;
      if (leave < 0 || ratio < best ||
          (ratio == best && t.basis[static_cast<std::size_t>(i)] < t.basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw LpError("unbounded phase-one problem");
    is_basic[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(leave)])] = false;
    t.pivot(leave, enter);
    is_basic[static_cast<std::size_t>(enter)] = true;
    Rational f = reduced[static_cast<std::size_t>(enter)];
    const auto& prow = t.a[static_cast<std::size_t>(leave)];
    for (int j = 0; j <= total; ++j) {
      const Rational& pv = prow[static_cast<std::size_t>(j)];
      if (sgn(pv) != 0) reduced[static_cast<std::size_t>(j)] -= f * pv;
    }
  }

  std::vector<Rational> y(static_cast<std::size_t>(total));
  for (int i = 0; i < m; ++i) {
    y[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])] =
        t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(total)];
  }
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    x[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(pos_col[static_cast<std::size_t>(v)])];
    int nc = neg_col[static_cast<std::size_t>(v)];
    if (nc >= 0) x[static_cast<std::size_t>(v)] -= y[static_cast<std::size_t>(nc)];
  }
  if (!prob.satisfied_by(x)) throw LpError("internal error: simplex witness failed re-verification");
  return x;
}

}  // namespace monadforge::lp
