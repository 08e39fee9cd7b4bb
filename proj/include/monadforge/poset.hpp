#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monadforge/rational.hpp"

namespace monadforge {

class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Subsets of a poset's carrier as bitmasks; carriers are limited to 64 points.
using PointSet = std::uint64_t;
inline constexpr int kMaxPosetSize = 64;
inline constexpr int kDefaultUpsetBound = 12;

inline bool contains(PointSet s, int x) { return (s >> x) & 1U; }
inline PointSet singleton(int x) { return PointSet{1} << x; }
std::vector<int> members(PointSet s);

// A binary relation on labelled points, as read from input before validation.
struct Relation {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
};

struct Violation {
  enum class Kind { IndexOutOfRange, DuplicateLabel, Reflexivity, Antisymmetry, Transitivity };
  Kind kind;
  int a = -1;
  int b = -1;
  int c = -1;
  std::string describe(const std::vector<std::string>& labels) const;
};

// Checks the partial order axioms on the relation exactly as given (no
// reflexive pairs are added). Returns the first violation found.
std::optional<Violation> validate(const Relation& rel);

class FinitePoset {
 public:
  // Adds reflexive pairs, then validates; throws PosetError on violation.
  FinitePoset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& leq_pairs);
  explicit FinitePoset(const Relation& rel) : FinitePoset(rel.labels, rel.pairs) {}

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_.at(static_cast<std::size_t>(x)); }
  int index_of(const std::string& label) const;

  bool leq(int x, int y) const { return contains(up_[static_cast<std::size_t>(x)], y); }
  PointSet all() const { return size() == 64 ? ~PointSet{0} : (PointSet{1} << size()) - 1; }
  PointSet up_of(int x) const { return up_[static_cast<std::size_t>(x)]; }
  PointSet down_of(int x) const { return down_[static_cast<std::size_t>(x)]; }

  PointSet up_closure(PointSet e) const;
  PointSet down_closure(PointSet e) const;
  PointSet order_convex_closure(PointSet e) const;
  bool is_up_set(PointSet e) const { return up_closure(e) == e; }
  bool is_down_set(PointSet e) const { return down_closure(e) == e; }
  PointSet minimal(PointSet e) const;
  PointSet maximal(PointSet e) const;

  // Every up-set, including the empty set and the whole carrier, once each,
  // in increasing order of bitmask.
  std::vector<PointSet> enumerate_upsets(int bound = kDefaultUpsetBound) const;

  // Points ordered so that every point comes after all points below it.
  std::vector<int> linear_extension() const;

  // Non-reflexive pairs (x, y) with x < y.
  std::vector<std::pair<int, int>> strict_pairs() const;

  // Canonical text of labels and order, used to identify spaces.
  const std::string& signature() const { return signature_; }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.signature_ == b.signature_; }

 private:
  std::vector<std::string> labels_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
  std::string signature_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

std::string default_label(int index);

enum class PosetKind { Chain, Antichain, Diamond, Random };

std::optional<PosetKind> parse_poset_kind(const std::string& name);
std::string to_string(PosetKind kind);

// chain: a < b < ...; antichain: no strict pairs; diamond: bottom < n-2
// incomparable middles < top (n >= 2); random: transitive closure of a DAG
// whose forward edges i -> j (i < j) are kept with probability `density`,
// deterministic in `seed`.
FinitePoset standard_poset(PosetKind kind, int n, std::uint64_t seed = 0,
                           const Rational& density = make_rational(1, 2));

class MonotoneMap {
 public:
  // Throws PosetError if the assignment is out of range or not monotone.
  MonotoneMap(PosetPtr source, PosetPtr target, std::vector<int> assignment);

  const PosetPtr& source() const { return source_; }
  const PosetPtr& target() const { return target_; }
  int operator()(int x) const { return assignment_.at(static_cast<std::size_t>(x)); }
  const std::vector<int>& assignment() const { return assignment_; }

  // Preimage of a subset of the target.
  PointSet preimage(PointSet s) const;

 private:
  PosetPtr source_;
  PosetPtr target_;
  std::vector<int> assignment_;
};

// Checks monotonicity of an arbitrary assignment without constructing a map.
bool is_monotone(const FinitePoset& source, const FinitePoset& target, const std::vector<int>& assignment);

// A monotone function into the extended nonnegative rationals.
class LSCFunction {
 public:
  LSCFunction(PosetPtr domain, std::vector<ExtRational> values);

  static LSCFunction indicator(PosetPtr domain, PointSet up_set);

  const PosetPtr& domain() const { return domain_; }
  const ExtRational& operator()(int x) const { return values_.at(static_cast<std::size_t>(x)); }
  const std::vector<ExtRational>& values() const { return values_; }

  friend LSCFunction operator+(const LSCFunction& a, const LSCFunction& b);

 private:
  PosetPtr domain_;
  std::vector<ExtRational> values_;
};

}  // namespace monadforge
