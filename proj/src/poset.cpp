#include "monadforge/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "monadforge/rng.hpp"

namespace monadforge {

std::vector<int> members(PointSet s) {
  std::vector<int> out;
  while (s != 0) {
    int x = std::countr_zero(s);
    out.push_back(x);
    s &= s - 1;
  }
  return out;
}

std::string Violation::describe(const std::vector<std::string>& labels) const {
  auto name = [&](int i) {
    if (i >= 0 && i < static_cast<int>(labels.size())) return labels[static_cast<std::size_t>(i)];
    return std::to_string(i);
  };
  switch (kind) {
    case Kind::IndexOutOfRange:
      return "index out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::DuplicateLabel:
      return "duplicate label: " + name(a);
    case Kind::Reflexivity:
      return "reflexivity fails at " + name(a);
    case Kind::Antisymmetry:
      return "antisymmetry fails at (" + name(a) + "," + name(b) + ")";
    case Kind::Transitivity:
      return "transitivity fails at (" + name(a) + "," + name(b) + "," + name(c) + ")";
  }
  return "unknown violation";
}

std::optional<Violation> validate(const Relation& rel) {
  const int n = static_cast<int>(rel.labels.size());
  if (n > kMaxPosetSize) return Violation{Violation::Kind::IndexOutOfRange, n, -1};
  std::set<std::string> seen;
  for (int i = 0; i < n; ++i) {
    if (!seen.insert(rel.labels[static_cast<std::size_t>(i)]).second) {
      return Violation{Violation::Kind::DuplicateLabel, i};
    }
  }
  std::vector<PointSet> up(static_cast<std::size_t>(n), 0);
  for (auto [x, y] : rel.pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n) return Violation{Violation::Kind::IndexOutOfRange, x, y};
    up[static_cast<std::size_t>(x)] |= singleton(y);
  }
  for (int x = 0; x < n; ++x) {
    if (!contains(up[static_cast<std::size_t>(x)], x)) return Violation{Violation::Kind::Reflexivity, x};
  }
  for (int x = 0; x < n; ++x) {
    for (int y : members(up[static_cast<std::size_t>(x)])) {
      if (y != x && contains(up[static_cast<std::size_t>(y)], x)) {
        return Violation{Violation::Kind::Antisymmetry, std::min(x, y), std::max(x, y)};
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y : members(up[static_cast<std::size_t>(x)])) {
      PointSet missing = up[static_cast<std::size_t>(y)] & ~up[static_cast<std::size_t>(x)];
      if (missing != 0) return Violation{Violation::Kind::Transitivity, x, y, std::countr_zero(missing)};
    }
  }
  return std::nullopt;
}

FinitePoset::FinitePoset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& leq_pairs)
    : labels_(std::move(labels)) {
  Relation rel{labels_, leq_pairs};
  for (int i = 0; i < size(); ++i) rel.pairs.emplace_back(i, i);
  if (auto v = validate(rel)) throw PosetError("invalid poset: " + v->describe(labels_));
  const auto n = static_cast<std::size_t>(size());
  up_.assign(n, 0);
  down_.assign(n, 0);
  for (auto [x, y] : rel.pairs) {
    up_[static_cast<std::size_t>(x)] |= singleton(y);
    down_[static_cast<std::size_t>(y)] |= singleton(x);
  }
  signature_ = std::to_string(n) + ":";
  for (std::size_t i = 0; i < n; ++i) {
    signature_ += labels_[i];
    signature_ += ',';
  }
  signature_ += ':';
  for (std::size_t i = 0; i < n; ++i) {
    signature_ += std::to_string(up_[i]);
    signature_ += ',';
  }
}

int FinitePoset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw PosetError("unknown point label '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

PointSet FinitePoset::up_closure(PointSet e) const {
  PointSet out = 0;
  for (int x : members(e)) out |= up_of(x);
  return out;
}

PointSet FinitePoset::down_closure(PointSet e) const {
  PointSet out = 0;
  for (int x : members(e)) out |= down_of(x);
  return out;
}

PointSet FinitePoset::order_convex_closure(PointSet e) const { return up_closure(e) & down_closure(e); }

PointSet FinitePoset::minimal(PointSet e) const {
  PointSet out = 0;
  for (int x : members(e)) {
    if ((down_of(x) & e) == singleton(x)) out |= singleton(x);
  }
  return out;
}

PointSet FinitePoset::maximal(PointSet e) const {
  PointSet out = 0;
  for (int x : members(e)) {
    if ((up_of(x) & e) == singleton(x)) out |= singleton(x);
  }
  return out;
}

std::vector<PointSet> FinitePoset::enumerate_upsets(int bound) const {
  if (size() > bound) {
    throw PosetError("up-set enumeration bound exceeded: " + std::to_string(size()) + " > " +
                     std::to_string(bound));
  }
  std::vector<PointSet> out;
  const PointSet limit = PointSet{1} << size();
  for (PointSet s = 0; s < limit; ++s) {
    if (is_up_set(s)) out.push_back(s);
  }
  return out;
}

std::vector<int> FinitePoset::linear_extension() const {
  std::vector<int> order(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return std::popcount(down_of(x)) < std::popcount(down_of(y));
  });
  return order;
}

std::vector<std::pair<int, int>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x) {
    for (int y : members(up_of(x))) {
      if (y != x) out.emplace_back(x, y);
    }
  }
  return out;
}

std::string default_label(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "p" + std::to_string(index);
}

std::optional<PosetKind> parse_poset_kind(const std::string& name) {
  if (name == "chain") return PosetKind::Chain;
  if (name == "antichain") return PosetKind::Antichain;
  if (name == "diamond") return PosetKind::Diamond;
  if (name == "random") return PosetKind::Random;
  return std::nullopt;
}

std::string to_string(PosetKind kind) {
  switch (kind) {
    case PosetKind::Chain: return "chain";
    case PosetKind::Antichain: return "antichain";
    case PosetKind::Diamond: return "diamond";
    case PosetKind::Random: return "random";
  }
  return "?";
}

FinitePoset standard_poset(PosetKind kind, int n, std::uint64_t seed, const Rational& density) {
  if (n < 1 || n > kMaxPosetSize) throw PosetError("poset size out of range: " + std::to_string(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(default_label(i));
  std::vector<std::pair<int, int>> pairs;
  switch (kind) {
    case PosetKind::Chain:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      break;
    case PosetKind::Antichain:
      break;
    case PosetKind::Diamond:
      if (n < 2) throw PosetError("diamond needs at least 2 points");
      for (int m = 1; m + 1 < n; ++m) {
        pairs.emplace_back(0, m);
        pairs.emplace_back(m, n - 1);
      }
      pairs.emplace_back(0, n - 1);
      break;
    case PosetKind::Random: {
      if (density < 0 || density > 1) throw PosetError("edge density must lie in [0,1]");
      Rng rng(seed);
      const mpz_class& num = density.get_num();
      const mpz_class& den = density.get_den();
      std::vector<PointSet> up(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = singleton(i);
      for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) {
          mpz_class draw = static_cast<unsigned long>(rng.next() % 1000000007ULL);
          if ((draw % den) < num) up[static_cast<std::size_t>(i)] |= up[static_cast<std::size_t>(j)];
        }
      }
      for (int i = 0; i < n; ++i)
        for (int j : members(up[static_cast<std::size_t>(i)]))
          if (j != i) pairs.emplace_back(i, j);
      break;
    }
  }
  return FinitePoset(labels, pairs);
}

bool is_monotone(const FinitePoset& source, const FinitePoset& target, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != source.size()) return false;
  for (int v : assignment) {
    if (v < 0 || v >= target.size()) return false;
  }
  for (auto [x, y] : source.strict_pairs()) {
    if (!target.leq(assignment[static_cast<std::size_t>(x)], assignment[static_cast<std::size_t>(y)])) return false;
  }
  return true;
}

MonotoneMap::MonotoneMap(PosetPtr source, PosetPtr target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (!is_monotone(*source_, *target_, assignment_)) throw PosetError("map is not monotone or out of range");
}

PointSet MonotoneMap::preimage(PointSet s) const {
  PointSet out = 0;
  for (int x = 0; x < source_->size(); ++x) {
    if (contains(s, assignment_[static_cast<std::size_t>(x)])) out |= singleton(x);
  }
  return out;
}

LSCFunction::LSCFunction(PosetPtr domain, std::vector<ExtRational> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != domain_->size()) throw PosetError("function size mismatch");
  for (auto [x, y] : domain_->strict_pairs()) {
    if (values_[static_cast<std::size_t>(y)] < values_[static_cast<std::size_t>(x)]) {
      throw PosetError("function is not monotone at (" + domain_->label(x) + "," + domain_->label(y) + ")");
    }
  }
}

LSCFunction LSCFunction::indicator(PosetPtr domain, PointSet up_set) {
  if (!domain->is_up_set(up_set)) throw PosetError("indicator of a non-up-set");
  std::vector<ExtRational> values;
  for (int x = 0; x < domain->size(); ++x) values.emplace_back(contains(up_set, x) ? 1L : 0L);
  return LSCFunction(std::move(domain), std::move(values));
}

LSCFunction operator+(const LSCFunction& a, const LSCFunction& b) {
  if (!(*a.domain_ == *b.domain_)) throw PosetError("sum of functions on different posets");
  std::vector<ExtRational> values;
  for (std::size_t i = 0; i < a.values_.size(); ++i) values.push_back(a.values_[i] + b.values_[i]);
  return LSCFunction(a.domain_, std::move(values));
}

}  // namespace monadforge
