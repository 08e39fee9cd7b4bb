#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "monadforge/poset.hpp"
#include "monadforge/rational.hpp"

namespace monadforge {

class SpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a query lands in a representation the oracles cannot decide,
// e.g. containment of a convex part in a union of several plain parts.
class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mass constraint on valuations: unrestricted, subnormalized, normalized.
enum class Flavor { All, Sub1, One };
enum class PrevKind { DN, AN, ADN };

std::string to_string(Flavor f);
std::string to_string(PrevKind k);
std::optional<Flavor> parse_flavor(const std::string& s);
std::optional<PrevKind> parse_prev_kind(const std::string& s);

class Space;
using SpacePtr = std::shared_ptr<const Space>;

class Space {
 public:
  enum class Kind { Base, Val, Smyth, Hoare, Plotkin, Prev };

  static SpacePtr base(PosetPtr poset);
  static SpacePtr val(SpacePtr child, Flavor flavor);
  static SpacePtr smyth(SpacePtr child);
  static SpacePtr hoare(SpacePtr child);
  static SpacePtr plotkin(SpacePtr child);
  static SpacePtr prev(SpacePtr child, PrevKind kind, Flavor flavor);

  Kind kind() const { return kind_; }
  const SpacePtr& child() const { return child_; }
  Flavor flavor() const { return flavor_; }
  PrevKind prev_kind() const { return prev_kind_; }
  // The poset at the bottom of the tower.
  const PosetPtr& poset() const { return poset_; }

  bool is_base() const { return kind_ == Kind::Base; }
  bool is_hyperspace() const { return kind_ == Kind::Smyth || kind_ == Kind::Hoare || kind_ == Kind::Plotkin; }
  // Valuation and prevision layers are cones; only their hyperspaces may
  // carry convex-flagged parts.
  bool has_convex_structure() const { return kind_ == Kind::Val || kind_ == Kind::Prev; }
  int depth() const;

  // The generator space of a prevision layer: valuations over the child.
  SpacePtr generator_space() const;

  const std::string& key() const { return key_; }
  // Human-readable functor notation, e.g. "S(V1(X))".
  std::string describe() const;

  friend bool operator==(const Space& a, const Space& b) { return a.key_ == b.key_; }

 private:
  Space() = default;
  Kind kind_ = Kind::Base;
  SpacePtr child_;
  PosetPtr poset_;
  Flavor flavor_ = Flavor::One;
  PrevKind prev_kind_ = PrevKind::DN;
  std::string key_;
};

class Element;

struct Part {
  std::vector<Element> gens;
  bool convex = false;
};

struct Atom;

enum class NodeKind { Point, Valuation, UpSet, DownSet, Lens, Prevision, Fork };

// Immutable, shared, finitely presented value. Structural identity is the
// canonical text `key()`; semantic equality needs a space (see order.hpp).
class Element {
 public:
  static Element point(int index);
  static Element valuation(std::vector<Atom> atoms);
  static Element dirac(const Element& child);
  static Element up_set(std::vector<Part> parts);
  static Element up_set(std::vector<Element> gens, bool convex);
  static Element down_set(std::vector<Part> parts);
  static Element down_set(std::vector<Element> gens, bool convex);
  static Element lens(std::vector<Part> up, std::vector<Part> down);
  static Element lens(std::vector<Element> gens, bool convex);
  // DN or AN prevision with valuation generators.
  static Element prevision(PrevKind kind, std::vector<Element> gens);
  // Pair of a superlinear (lower) and a sublinear (upper) prevision.
  static Element fork(std::vector<Element> lower, std::vector<Element> upper);

  NodeKind kind() const;
  int index() const;
  const std::vector<Atom>& atoms() const;
  // Parts of an up-set or down-set.
  const std::vector<Part>& parts() const;
  const std::vector<Part>& up_parts() const;
  const std::vector<Part>& down_parts() const;
  PrevKind prev_kind() const;
  // Generators of a DN/AN prevision.
  const std::vector<Element>& gens() const;
  const std::vector<Element>& lower() const;
  const std::vector<Element>& upper() const;

  // All generators of all parts, in order.
  std::vector<Element> all_gens() const;
  Rational mass() const;

  const std::string& key() const;
  friend bool operator==(const Element& a, const Element& b) { return a.key() == b.key(); }
  friend bool operator<(const Element& a, const Element& b) { return a.key() < b.key(); }

  struct Node;

 private:
  explicit Element(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Atom {
  Rational weight;
  Element child;
};

// Structural well-formedness against a space: node kinds, index ranges,
// nonempty generator lists, mass constraints, convex flags only over cones.
// Throws SpaceError describing the first problem.
void check_element(const Space& space, const Element& e);

}  // namespace monadforge
