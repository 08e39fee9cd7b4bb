#pragma once

#include <json.hpp>
#include <string>

#include "monadforge/space.hpp"

namespace monadforge {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"elements":["a","b"],"leq":[[0,1]]}; reflexive pairs are optional.
json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const json& j);

// {"base":<poset>} | {"val":{"flavor":"one","of":S}} | {"smyth":S} |
// {"hoare":S} | {"plotkin":S} | {"prev":{"kind":"DN","flavor":"one","of":S}}
json space_to_json(const Space& s);
SpacePtr space_from_json(const json& j);

// Tagged objects: {"pt":"a"}, {"val":[["1/2",E],...]},
// {"up":{"convex":true,"gens":[...]}} (or {"up":{"parts":[...]}}),
// {"down":...}, {"lens":{"up":...,"down":...}},
// {"prev":{"kind":"DN","gens":[...]}}, {"prev":{"kind":"ADN","lower":[...],"upper":[...]}}.
json element_to_json(const Space& s, const Element& e);
// Decodes and checks against the space; throws FormatError.
Element element_from_json(const Space& s, const json& j);

json lsc_to_json(const LSCFunction& h);

// Compact text form, e.g. "1/2δa+1/2δb" or "↑conv{δa, δb}".
std::string show(const Space& s, const Element& e);

}  // namespace monadforge
