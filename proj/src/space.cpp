#include "monadforge/space.hpp"

namespace monadforge {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::All: return "all";
    case Flavor::Sub1: return "sub1";
    case Flavor::One: return "one";
  }
  return "?";
}

std::string to_string(PrevKind k) {
  switch (k) {
    case PrevKind::DN: return "DN";
    case PrevKind::AN: return "AN";
    case PrevKind::ADN: return "ADN";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(const std::string& s) {
  if (s == "all") return Flavor::All;
  if (s == "sub1") return Flavor::Sub1;
  if (s == "one") return Flavor::One;
  return std::nullopt;
}

std::optional<PrevKind> parse_prev_kind(const std::string& s) {
  if (s == "DN") return PrevKind::DN;
  if (s == "AN") return PrevKind::AN;
  if (s == "ADN") return PrevKind::ADN;
  return std::nullopt;
}

namespace {

std::string flavor_code(Flavor f) {
  switch (f) {
    case Flavor::All: return "a";
    case Flavor::Sub1: return "s";
    case Flavor::One: return "1";
  }
  return "?";
}

}  // namespace

SpacePtr Space::base(PosetPtr poset) {
  if (!poset) throw SpaceError("base space needs a poset");
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Base;
  s->poset_ = std::move(poset);
  s->key_ = "X[" + s->poset_->signature() + "]";
  return s;
}

SpacePtr Space::val(SpacePtr child, Flavor flavor) {
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Val;
  s->flavor_ = flavor;
  s->poset_ = child->poset_;
  s->key_ = "V" + flavor_code(flavor) + "(" + child->key_ + ")";
  s->child_ = std::move(child);
  return s;
}

SpacePtr Space::smyth(SpacePtr child) {
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Smyth;
  s->poset_ = child->poset_;
  s->key_ = "S(" + child->key_ + ")";
  s->child_ = std::move(child);
  return s;
}

SpacePtr Space::hoare(SpacePtr child) {
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Hoare;
  s->poset_ = child->poset_;
  s->key_ = "H(" + child->key_ + ")";
  s->child_ = std::move(child);
  return s;
}

SpacePtr Space::plotkin(SpacePtr child) {
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Plotkin;
  s->poset_ = child->poset_;
  s->key_ = "P(" + child->key_ + ")";
  s->child_ = std::move(child);
  return s;
}

SpacePtr Space::prev(SpacePtr child, PrevKind kind, Flavor flavor) {
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Prev;
  s->prev_kind_ = kind;
  s->flavor_ = flavor;
  s->poset_ = child->poset_;
  s->key_ = to_string(kind) + flavor_code(flavor) + "(" + child->key_ + ")";
  s->child_ = std::move(child);
  return s;
}

int Space::depth() const { return child_ ? 1 + child_->depth() : 0; }

SpacePtr Space::generator_space() const {
  if (kind_ != Kind::Prev) throw SpaceError("generator_space of a non-prevision space");
  return val(child_, flavor_);
}

std::string Space::describe() const {
  switch (kind_) {
    case Kind::Base: return "X";
    case Kind::Val:
      return std::string(flavor_ == Flavor::All ? "V" : flavor_ == Flavor::Sub1 ? "V<=1" : "V1") + "(" +
             child_->describe() + ")";
    case Kind::Smyth: return "S(" + child_->describe() + ")";
    case Kind::Hoare: return "H(" + child_->describe() + ")";
    case Kind::Plotkin: return "P(" + child_->describe() + ")";
    case Kind::Prev:
      return to_string(prev_kind_) + (flavor_ == Flavor::All ? "" : flavor_ == Flavor::Sub1 ? "<=1" : "1") + "(" +
             child_->describe() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

struct PointNode {
  int index;
};
struct ValuationNode {
  std::vector<Atom> atoms;
};
struct SetNode {
  std::vector<Part> parts;
};
struct LensNode {
  std::vector<Part> up;
  std::vector<Part> down;
};
struct PrevisionNode {
  PrevKind kind;
  std::vector<Element> gens;
};
struct ForkNode {
  std::vector<Element> lower;
  std::vector<Element> upper;
};

struct Element::Node {
  NodeKind kind;
  std::variant<PointNode, ValuationNode, SetNode, LensNode, PrevisionNode, ForkNode> data;
  std::string key;
};

namespace {

std::string gens_key(const std::vector<Element>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += gens[i].key();
  }
  return out;
}

std::string parts_key(const std::vector<Part>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '|';
    out += parts[i].convex ? "c[" : "p[";
    out += gens_key(parts[i].gens);
    out += ']';
  }
  return out;
}

void require_nonempty(const std::vector<Part>& parts, const char* what) {
  if (parts.empty()) throw SpaceError(std::string(what) + " needs at least one part");
  for (const auto& p : parts) {
    if (p.gens.empty()) throw SpaceError(std::string(what) + " part without generators");
  }
}

}  // namespace

Element Element::point(int index) {
  if (index < 0) throw SpaceError("negative point index");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Point;
  n->data = PointNode{index};
  n->key = "#" + std::to_string(index);
  return Element(std::move(n));
}

Element Element::valuation(std::vector<Atom> atoms) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Valuation;
  n->key = "V(";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].weight < 0) throw SpaceError("negative valuation weight");
    if (i) n->key += ';';
    n->key += atoms[i].weight.get_str();
    n->key += '*';
    n->key += atoms[i].child.key();
  }
  n->key += ')';
  n->data = ValuationNode{std::move(atoms)};
  return Element(std::move(n));
}

Element Element::dirac(const Element& child) { return valuation({Atom{Rational(1), child}}); }

Element Element::up_set(std::vector<Part> parts) {
  require_nonempty(parts, "up-set");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::UpSet;
  n->key = "U{" + parts_key(parts) + "}";
  n->data = SetNode{std::move(parts)};
  return Element(std::move(n));
}

Element Element::up_set(std::vector<Element> gens, bool convex) {
  return up_set(std::vector<Part>{Part{std::move(gens), convex}});
}

Element Element::down_set(std::vector<Part> parts) {
  require_nonempty(parts, "down-set");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::DownSet;
  n->key = "D{" + parts_key(parts) + "}";
  n->data = SetNode{std::move(parts)};
  return Element(std::move(n));
}

Element Element::down_set(std::vector<Element> gens, bool convex) {
  return down_set(std::vector<Part>{Part{std::move(gens), convex}});
}

Element Element::lens(std::vector<Part> up, std::vector<Part> down) {
  require_nonempty(up, "lens up side");
  require_nonempty(down, "lens down side");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Lens;
  n->key = "L{" + parts_key(up) + "/" + parts_key(down) + "}";
  n->data = LensNode{std::move(up), std::move(down)};
  return Element(std::move(n));
}

Element Element::lens(std::vector<Element> gens, bool convex) {
  std::vector<Part> up{Part{gens, convex}};
  std::vector<Part> down{Part{std::move(gens), convex}};
  return lens(std::move(up), std::move(down));
}

Element Element::prevision(PrevKind kind, std::vector<Element> gens) {
  if (kind == PrevKind::ADN) throw SpaceError("ADN previsions are built with Element::fork");
  if (gens.empty()) throw SpaceError("prevision needs at least one generator");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Prevision;
  n->key = std::string(kind == PrevKind::DN ? "N(" : "A(") + gens_key(gens) + ")";
  n->data = PrevisionNode{kind, std::move(gens)};
  return Element(std::move(n));
}

Element Element::fork(std::vector<Element> lower, std::vector<Element> upper) {
  if (lower.empty() || upper.empty()) throw SpaceError("fork needs generators on both sides");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Fork;
  n->key = "F(" + gens_key(lower) + "/" + gens_key(upper) + ")";
  n->data = ForkNode{std::move(lower), std::move(upper)};
  return Element(std::move(n));
}

NodeKind Element::kind() const { return node_->kind; }

namespace {
[[noreturn]] void wrong_kind(const char* accessor, const std::string& key) {
  throw SpaceError(std::string(accessor) + " called on element " + key);
}
}  // namespace

int Element::index() const {
  if (auto* p = std::get_if<PointNode>(&node_->data)) return p->index;
  wrong_kind("index()", key());
}

const std::vector<Atom>& Element::atoms() const {
  if (auto* p = std::get_if<ValuationNode>(&node_->data)) return p->atoms;
  wrong_kind("atoms()", key());
}

const std::vector<Part>& Element::parts() const {
  if (auto* p = std::get_if<SetNode>(&node_->data)) return p->parts;
  wrong_kind("parts()", key());
}

const std::vector<Part>& Element::up_parts() const {
  if (auto* p = std::get_if<LensNode>(&node_->data)) return p->up;
  wrong_kind("up_parts()", key());
}

const std::vector<Part>& Element::down_parts() const {
  if (auto* p = std::get_if<LensNode>(&node_->data)) return p->down;
  wrong_kind("down_parts()", key());
}

PrevKind Element::prev_kind() const {
  if (auto* p = std::get_if<PrevisionNode>(&node_->data)) return p->kind;
  if (std::holds_alternative<ForkNode>(node_->data)) return PrevKind::ADN;
  wrong_kind("prev_kind()", key());
}

const std::vector<Element>& Element::gens() const {
  if (auto* p = std::get_if<PrevisionNode>(&node_->data)) return p->gens;
  wrong_kind("gens()", key());
}

const std::vector<Element>& Element::lower() const {
  if (auto* p = std::get_if<ForkNode>(&node_->data)) return p->lower;
  wrong_kind("lower()", key());
}

const std::vector<Element>& Element::upper() const {
  if (auto* p = std::get_if<ForkNode>(&node_->data)) return p->upper;
  wrong_kind("upper()", key());
}

std::vector<Element> Element::all_gens() const {
  std::vector<Element> out;
  auto add_parts = [&](const std::vector<Part>& parts) {
    for (const auto& p : parts) out.insert(out.end(), p.gens.begin(), p.gens.end());
  };
  switch (kind()) {
    case NodeKind::UpSet:
    case NodeKind::DownSet: add_parts(parts()); break;
    case NodeKind::Lens:
      add_parts(up_parts());
      add_parts(down_parts());
      break;
    case NodeKind::Prevision: out = gens(); break;
    case NodeKind::Fork:
      out = lower();
      out.insert(out.end(), upper().begin(), upper().end());
      break;
    default: wrong_kind("all_gens()", key());
  }
  return out;
}

Rational Element::mass() const {
  Rational m = 0;
  for (const auto& a : atoms()) m += a.weight;
  return m;
}

const std::string& Element::key() const { return node_->key; }

// ---------------------------------------------------------------------------

namespace {

void check_parts(const Space& space, const std::vector<Part>& parts) {
  for (const auto& p : parts) {
    if (p.convex && !space.child()->has_convex_structure()) {
      throw SpaceError("convex part over " + space.child()->describe() + " which has no convex structure");
    }
    for (const auto& g : p.gens) check_element(*space.child(), g);
  }
}

void check_mass(Flavor flavor, const Element& v) {
  Rational m = v.mass();
  if (flavor == Flavor::One && m != 1) throw SpaceError("valuation of mass " + m.get_str() + " in a mass-1 space");
  if (flavor == Flavor::Sub1 && m > 1) throw SpaceError("valuation of mass " + m.get_str() + " exceeds 1");
}

}  // namespace

void check_element(const Space& space, const Element& e) {
  auto expect = [&](NodeKind k) {
    if (e.kind() != k) throw SpaceError("element " + e.key() + " does not inhabit " + space.describe());
  };
  switch (space.kind()) {
    case Space::Kind::Base:
      expect(NodeKind::Point);
      if (e.index() >= space.poset()->size()) throw SpaceError("point index out of range: " + e.key());
      return;
    case Space::Kind::Val:
      expect(NodeKind::Valuation);
      check_mass(space.flavor(), e);
      for (const auto& a : e.atoms()) check_element(*space.child(), a.child);
      return;
    case Space::Kind::Smyth:
      expect(NodeKind::UpSet);
      check_parts(space, e.parts());
      return;
    case Space::Kind::Hoare:
      expect(NodeKind::DownSet);
      check_parts(space, e.parts());
      return;
    case Space::Kind::Plotkin:
      expect(NodeKind::Lens);
      check_parts(space, e.up_parts());
      check_parts(space, e.down_parts());
      return;
    case Space::Kind::Prev: {
      auto gen_space = space.generator_space();
      if (space.prev_kind() == PrevKind::ADN) {
        expect(NodeKind::Fork);
        for (const auto& g : e.lower()) check_element(*gen_space, g);
        for (const auto& g : e.upper()) check_element(*gen_space, g);
      } else {
        expect(NodeKind::Prevision);
        if (e.prev_kind() != space.prev_kind() && e.gens().size() > 1) {
          throw SpaceError("prevision " + e.key() + " has the wrong kind for " + space.describe());
        }
        for (const auto& g : e.gens()) check_element(*gen_space, g);
      }
      return;
    }
  }
}

}  // namespace monadforge
