#include "monadforge/json_io.hpp"

namespace monadforge {

json poset_to_json(const FinitePoset& p) {
  json leq = json::array();
  for (auto [x, y] : p.strict_pairs()) leq.push_back({x, y});
  return json{{"elements", p.labels()}, {"leq", leq}};
}

FinitePoset poset_from_json(const json& j) {
  try {
    Relation rel;
    rel.labels = j.at("elements").get<std::vector<std::string>>();
    for (const auto& pr : j.value("leq", json::array())) {
      if (!pr.is_array() || pr.size() != 2) throw FormatError("leq entries must be index pairs");
      rel.pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
    }
    return FinitePoset(rel);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed poset JSON: ") + e.what());
  } catch (const PosetError& e) {
    throw FormatError(e.what());
  }
}

json space_to_json(const Space& s) {
  switch (s.kind()) {
    case Space::Kind::Base: return json{{"base", poset_to_json(*s.poset())}};
    case Space::Kind::Val:
      return json{{"val", {{"flavor", to_string(s.flavor())}, {"of", space_to_json(*s.child())}}}};
    case Space::Kind::Smyth: return json{{"smyth", space_to_json(*s.child())}};
    case Space::Kind::Hoare: return json{{"hoare", space_to_json(*s.child())}};
    case Space::Kind::Plotkin: return json{{"plotkin", space_to_json(*s.child())}};
    case Space::Kind::Prev:
      return json{{"prev",
                   {{"kind", to_string(s.prev_kind())},
                    {"flavor", to_string(s.flavor())},
                    {"of", space_to_json(*s.child())}}}};
  }
  return json();
}

namespace {

Flavor flavor_at(const json& j) {
  auto f = parse_flavor(j.value("flavor", std::string("one")));
  if (!f) throw FormatError("unknown flavor in " + j.dump());
  return *f;
}

}  // namespace

SpacePtr space_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw FormatError("space must be a single-key object: " + j.dump());
  const auto& [tag, body] = *j.items().begin();
  if (tag == "base") return Space::base(std::make_shared<const FinitePoset>(poset_from_json(body)));
  if (tag == "val") return Space::val(space_from_json(body.at("of")), flavor_at(body));
  if (tag == "smyth") return Space::smyth(space_from_json(body));
  if (tag == "hoare") return Space::hoare(space_from_json(body));
  if (tag == "plotkin") return Space::plotkin(space_from_json(body));
  if (tag == "prev") {
    auto kind = parse_prev_kind(body.value("kind", std::string()));
    if (!kind) throw FormatError("unknown prevision kind in " + body.dump());
    return Space::prev(space_from_json(body.at("of")), *kind, flavor_at(body));
  }
  throw FormatError("unknown space tag '" + tag + "'");
}

namespace {

json gens_to_json(const Space& child, const std::vector<Element>& gens) {
  json arr = json::array();
  for (const auto& g : gens) arr.push_back(element_to_json(child, g));
  return arr;
}

json parts_to_json(const Space& child, const std::vector<Part>& parts) {
  if (parts.size() == 1) return json{{"convex", parts[0].convex}, {"gens", gens_to_json(child, parts[0].gens)}};
  json arr = json::array();
  for (const auto& p : parts) arr.push_back(json{{"convex", p.convex}, {"gens", gens_to_json(child, p.gens)}});
  return json{{"parts", arr}};
}

std::vector<Element> gens_from_json(const Space& child, const json& arr) {
  if (!arr.is_array()) throw FormatError("generator list must be an array");
  std::vector<Element> out;
  for (const auto& g : arr) out.push_back(element_from_json(child, g));
  return out;
}

std::vector<Part> parts_from_json(const Space& child, const json& j) {
  if (j.is_array()) return {Part{gens_from_json(child, j), false}};
  if (j.contains("parts")) {
    std::vector<Part> out;
    for (const auto& p : j.at("parts")) out.push_back(Part{gens_from_json(child, p.at("gens")), p.value("convex", false)});
    return out;
  }
  return {Part{gens_from_json(child, j.at("gens")), j.value("convex", false)}};
}

Element decode(const Space& s, const json& j) {
  if (!j.is_object() || j.size() != 1) throw FormatError("element must be a single-key object: " + j.dump());
  const auto& [tag, body] = *j.items().begin();
  switch (s.kind()) {
    case Space::Kind::Base:
      if (tag != "pt") break;
      if (body.is_number_integer()) return Element::point(body.get<int>());
      return Element::point(s.poset()->index_of(body.get<std::string>()));
    case Space::Kind::Val: {
      if (tag != "val") break;
      std::vector<Atom> atoms;
      for (const auto& a : body) {
        if (!a.is_array() || a.size() != 2) throw FormatError("valuation atoms are [weight, element] pairs");
        Rational w = a[0].is_string() ? parse_rational(a[0].get<std::string>()) : Rational(a[0].get<long>());
        atoms.push_back(Atom{w, element_from_json(*s.child(), a[1])});
      }
      return Element::valuation(std::move(atoms));
    }
    case Space::Kind::Smyth:
      if (tag != "up") break;
      return Element::up_set(parts_from_json(*s.child(), body));
    case Space::Kind::Hoare:
      if (tag != "down") break;
      return Element::down_set(parts_from_json(*s.child(), body));
    case Space::Kind::Plotkin:
      if (tag != "lens") break;
      if (body.contains("up")) {
        return Element::lens(parts_from_json(*s.child(), body.at("up")), parts_from_json(*s.child(), body.at("down")));
      }
      return Element::lens(gens_from_json(*s.child(), body.at("gens")), body.value("convex", false));
    case Space::Kind::Prev: {
      if (tag != "prev") break;
      auto gen_space = s.generator_space();
      auto kind = parse_prev_kind(body.value("kind", to_string(s.prev_kind())));
      if (!kind) throw FormatError("unknown prevision kind");
      if (*kind == PrevKind::ADN) {
        return Element::fork(gens_from_json(*gen_space, body.at("lower")), gens_from_json(*gen_space, body.at("upper")));
      }
      return Element::prevision(*kind, gens_from_json(*gen_space, body.at("gens")));
    }
  }
  throw FormatError("element tag '" + tag + "' does not fit space " + s.describe());
}

}  // namespace

json element_to_json(const Space& s, const Element& e) {
  switch (e.kind()) {
    case NodeKind::Point: return json{{"pt", s.poset()->label(e.index())}};
    case NodeKind::Valuation: {
      json arr = json::array();
      for (const auto& a : e.atoms()) arr.push_back(json::array({a.weight.get_str(), element_to_json(*s.child(), a.child)}));
      return json{{"val", arr}};
    }
    case NodeKind::UpSet: return json{{"up", parts_to_json(*s.child(), e.parts())}};
    case NodeKind::DownSet: return json{{"down", parts_to_json(*s.child(), e.parts())}};
    case NodeKind::Lens:
      return json{{"lens", {{"up", parts_to_json(*s.child(), e.up_parts())}, {"down", parts_to_json(*s.child(), e.down_parts())}}}};
    case NodeKind::Prevision:
      return json{{"prev", {{"kind", to_string(e.prev_kind())}, {"gens", gens_to_json(*s.generator_space(), e.gens())}}}};
    case NodeKind::Fork:
      return json{{"prev",
                   {{"kind", "ADN"},
                    {"lower", gens_to_json(*s.generator_space(), e.lower())},
                    {"upper", gens_to_json(*s.generator_space(), e.upper())}}}};
  }
  return json();
}

Element element_from_json(const Space& s, const json& j) {
  try {
    Element e = decode(s, j);
    check_element(s, e);
    return e;
  } catch (const json::exception& ex) {
    throw FormatError(std::string("malformed element JSON: ") + ex.what());
  } catch (const SpaceError& ex) {
    throw FormatError(ex.what());
  } catch (const PosetError& ex) {
    throw FormatError(ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FormatError(ex.what());
  }
}

json lsc_to_json(const LSCFunction& h) {
  json out = json::object();
  for (int x = 0; x < h.domain()->size(); ++x) out[h.domain()->label(x)] = h(x).str();
  return out;
}

namespace {

std::string show_gens(const Space& child, const std::vector<Element>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += show(child, gens[i]);
  }
  return out;
}

std::string show_parts(const Space& child, const std::vector<Part>& parts, const char* arrow) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ∪ ";
    out += arrow;
    out += parts[i].convex ? "conv{" : "{";
    out += show_gens(child, parts[i].gens);
    out += "}";
  }
  return out;
}

}  // namespace

std::string show(const Space& s, const Element& e) {
  switch (e.kind()) {
    case NodeKind::Point: return s.poset()->label(e.index());
    case NodeKind::Valuation: {
      if (e.atoms().empty()) return "0";
      std::string out;
      for (std::size_t i = 0; i < e.atoms().size(); ++i) {
        const auto& a = e.atoms()[i];
        if (i) out += "+";
        if (a.weight != 1) out += a.weight.get_str();
        std::string inner = show(*s.child(), a.child);
        out += s.child()->is_base() ? "δ" + inner : "δ[" + inner + "]";
      }
      return out;
    }
    case NodeKind::UpSet: return show_parts(*s.child(), e.parts(), "↑");
    case NodeKind::DownSet: return show_parts(*s.child(), e.parts(), "↓");
    case NodeKind::Lens:
      return "⟨" + show_parts(*s.child(), e.up_parts(), "↑") + " ∩ " + show_parts(*s.child(), e.down_parts(), "↓") + "⟩";
    case NodeKind::Prevision:
      return to_string(e.prev_kind()) + "{" + show_gens(*s.generator_space(), e.gens()) + "}";
    case NodeKind::Fork:
      return "(DN{" + show_gens(*s.generator_space(), e.lower()) + "}, AN{" + show_gens(*s.generator_space(), e.upper()) + "})";
  }
  return "?";
}

}  // namespace monadforge
