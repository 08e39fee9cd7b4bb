#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "lawsuite_internal.hpp"

namespace monadforge {

using namespace lawsuite_detail;

AlgebraStructure free_algebra(const Case& c, const SpacePtr& base) {
  SpacePtr carrier = c.u_of(base);
  auto flatten = [c, base](const Element& ff) { return combined_mult(c, base, ff); };
  ElementMap gamma{c.u_of(carrier), carrier, flatten, false, "gamma"};
  ElementMap alpha{c.s_of(carrier), carrier,
                   [c, carrier, flatten](const Element& q) { return flatten(morphism_i(c, carrier, q)); }, false,
                   "alpha"};
  ElementMap beta{c.t_of(carrier), carrier,
                  [c, carrier, flatten](const Element& nu) { return flatten(morphism_j(c, carrier, nu)); }, true,
                  "beta"};
  return AlgebraStructure{carrier, alpha, beta, gamma};
}

SuiteReport run_algebra_checks(const Case& c, const AlgebraFactory& factory, const SuiteConfig& cfg) {
  std::vector<Equation> eqs;
  eqs.push_back({"algebra-diagram", [c, factory, cfg](Rng& rng, const SpacePtr& x) {
                   AlgebraStructure a = factory(rng, x);
                   SpacePtr y = a.carrier;
                   SpacePtr tsy = c.t_of(c.s_of(y));
                   Element xi = draw(tsy, rng, cfg);
                   Element lhs = a.beta(fmap(c.T(), a.alpha, xi));
                   Element rhs = a.alpha(fmap(c.S(), a.beta, lambda(c, y, xi).value));
                   return compare(y, lhs, rhs, {{"xi", {tsy, xi}}});
                 }, 3});
  eqs.push_back({"algebra-gamma", [c, factory, cfg](Rng& rng, const SpacePtr& x) {
                   AlgebraStructure a = factory(rng, x);
                   if (!a.gamma) return Outcome{};
                   SpacePtr y = a.carrier;
                   SpacePtr uy = c.u_of(y);
                   Element f = draw(uy, rng, cfg);
                   Element rhs = a.alpha(fmap(c.S(), a.beta, retraction_s(c, y, f)));
                   return compare(y, (*a.gamma)(f), rhs, {{"f", {uy, f}}});
                 }, 2});
  return run_all("algebra", eqs, c.name(), to_string(c.flavor), cfg);
}

SuiteReport run_algebra_checks(const Case& c, const SuiteConfig& cfg) {
  return run_algebra_checks(c, [c](Rng&, const SpacePtr& base) { return free_algebra(c, base); }, cfg);
}

namespace {

std::vector<Element> points_of(PointSet set, int n) {
  std::vector<Element> out;
  for (int p = 0; p < n; ++p) {
    if (set >> p & 1U) out.push_back(Element::point(p));
  }
  return out;
}

// Membership of nu in a hyperspace element of S(T(x)) through the
// specialization order, which goes through the convex-membership LP.
bool in_hyperspace_element(const Case& c, const SpacePtr& x, const Element& set, const Element& nu) {
  SpacePtr st = c.st_of(x);
  switch (c.kind) {
    case PrevKind::DN: return leq_elements(*st, set, Element::up_set({nu}, false));
    case PrevKind::AN: return leq_elements(*st, Element::down_set({nu}, false), set);
    case PrevKind::ADN: {
      SpacePtr up = Space::smyth(c.t_of(x));
      SpacePtr down = Space::hoare(c.t_of(x));
      return leq_elements(*up, lens_upper_part(set), Element::up_set({nu}, false)) &&
             leq_elements(*down, Element::down_set({nu}, false), lens_lower_part(set));
    }
  }
  return false;
}

// Membership of nu in the plain image of Q under the unit of T, one
// stochastic comparison per Dirac generator.
bool in_unit_image(const Case& c, const SpacePtr& x, const Element& q, const Element& nu,
                   lp::StochasticMethod method) {
  SpacePtr tx_ptr = c.t_of(x);
  const Space& tx = *tx_ptr;
  auto above_some = [&](const std::vector<Element>& gens) {
    for (const auto& g : gens) {
      if (lp::stochastic_leq(tx, Element::dirac(g), nu, method)) return true;
    }
    return false;
  };
  auto below_some = [&](const std::vector<Element>& gens) {
    for (const auto& g : gens) {
      if (lp::stochastic_leq(tx, nu, Element::dirac(g), method)) return true;
    }
    return false;
  };
  switch (c.kind) {
    case PrevKind::DN: return above_some(q.all_gens());
    case PrevKind::AN: return below_some(q.all_gens());
    case PrevKind::ADN:
      return above_some(lens_upper_part(q).all_gens()) && below_some(lens_lower_part(q).all_gens());
  }
  return false;
}

Element hyperspace_from(const Case& c, const std::vector<Element>& points) {
  switch (c.kind) {
    case PrevKind::DN: return Element::up_set(points, false);
    case PrevKind::AN: return Element::down_set(points, false);
    case PrevKind::ADN: return Element::lens(points, false);
  }
  return Element::up_set(points, false);
}

Element midpoint(const Element& a, const Element& b) {
  std::vector<Atom> atoms;
  for (const auto& at : a.atoms()) atoms.push_back(Atom{Rational(at.weight / 2), at.child});
  for (const auto& at : b.atoms()) atoms.push_back(Atom{Rational(at.weight / 2), at.child});
  return Element::valuation(std::move(atoms));
}

std::optional<NonDistributivityWitness> witness_on(const Case& c, const PosetPtr& poset) {
  SpacePtr x = Space::base(poset);
  SpacePtr sx = c.s_of(x);
  SpacePtr tx = c.t_of(x);
  SpacePtr st = c.st_of(x);
  const int n = poset->size();
  std::set<std::string> seen;
  for (PointSet subset = 1; subset <= poset->all(); ++subset) {
    Element q = canonicalize(*sx, hyperspace_from(c, points_of(subset, n)));
    if (!seen.insert(q.key()).second) continue;
    LambdaOutput out = lambda(c, x, Element::dirac(q));
    Element unit_image = canonicalize(*st, fmap(c.S(), unit_map(c.T(), x), q));
    if (equal_elements(*st, out.value, unit_image)) continue;
    std::vector<Element> candidates;
    const auto& combos = out.combinations;
    for (std::size_t i = 0; i < combos.size(); ++i) {
      for (std::size_t j = i + 1; j < combos.size(); ++j) candidates.push_back(midpoint(combos[i], combos[j]));
    }
    candidates.insert(candidates.end(), combos.begin(), combos.end());
    for (const auto& raw : candidates) {
      Element nu = canonicalize(*tx, raw);
      NonDistributivityWitness w{poset, q, out.value, unit_image, nu};
      w.in_lambda_by_formula = in_hyperspace_element(c, x, out.value, nu);
      w.in_lambda_by_enumeration = lambda_membership_oracle(c, x, Element::dirac(q), nu);
      w.in_unit_by_coupling = in_unit_image(c, x, q, nu, lp::StochasticMethod::Coupling);
      w.in_unit_by_enumeration = in_unit_image(c, x, q, nu, lp::StochasticMethod::Enumerate);
      if (w.verified()) return w;
    }
  }
  return std::nullopt;
}

PosetPtr make_poset(PosetKind kind, int n) { return std::make_shared<FinitePoset>(standard_poset(kind, n)); }

}  // namespace

json to_json(const Case& c, const NonDistributivityWitness& w) {
  SpacePtr x = Space::base(w.poset);
  json j = json::object();
  j["case"] = c.name();
  j["flavor"] = to_string(c.flavor);
  j["poset"] = poset_to_json(*w.poset);
  j["q"] = show(*c.s_of(x), w.q);
  j["lambda"] = show(*c.st_of(x), w.lambda_value);
  j["unit_image"] = show(*c.st_of(x), w.unit_image);
  j["separating"] = show(*c.t_of(x), w.separating);
  j["separating_json"] = element_to_json(*c.t_of(x), w.separating);
  j["in_lambda_by_formula"] = w.in_lambda_by_formula;
  j["in_lambda_by_enumeration"] = w.in_lambda_by_enumeration;
  j["in_unit_by_coupling"] = w.in_unit_by_coupling;
  j["in_unit_by_enumeration"] = w.in_unit_by_enumeration;
  return j;
}

std::optional<NonDistributivityWitness> find_nondistributivity_witness(const Case& c,
                                                                       const std::vector<PosetPtr>& bases) {
  for (const auto& poset : bases) {
    if (auto w = witness_on(c, poset)) return w;
  }
  return std::nullopt;
}

std::optional<NonDistributivityWitness> find_nondistributivity_witness(const Case& c) {
  return find_nondistributivity_witness(
      c, {make_poset(PosetKind::Antichain, 2), make_poset(PosetKind::Antichain, 3), make_poset(PosetKind::Diamond, 4)});
}

SuiteReport run_witness_search(const Case& c, const SuiteConfig&) {
  SuiteReport report{"witness", {}};
  auto timed = [&](const std::string& id, const std::function<std::optional<json>()>& body) {
    auto start = std::chrono::steady_clock::now();
    EquationReport r{id, c.name(), to_string(c.flavor), 1, 0, std::nullopt, 0};
    try {
      r.witness = body();
    } catch (const std::exception& e) {
      r.witness = json{{"error", e.what()}};
    }
    if (r.witness) r.failures = 1;
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    report.equations.push_back(std::move(r));
  };
  timed("witness-antichain", [&]() -> std::optional<json> {
    auto w = find_nondistributivity_witness(c, {make_poset(PosetKind::Antichain, 2)});
    if (!w) return json{{"error", "no witness on the 2-point antichain"}};
    return std::nullopt;
  });
  timed("no-witness-chains", [&]() -> std::optional<json> {
    for (int n = 1; n <= 4; ++n) {
      if (auto w = find_nondistributivity_witness(c, {make_poset(PosetKind::Chain, n)})) return to_json(c, *w);
    }
    return std::nullopt;
  });
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"monad",      "retraction", "weaklaw",   "lambda-dual",
                                              "idempotent", "witness",    "roundtrip", "strassen",
                                              "algebra",    "naturality", "adn-components"};
  return names;
}

int default_instances(const std::string& suite) {
  static const std::map<std::string, int> counts{
      {"monad", 50},     {"retraction", 30}, {"weaklaw", 30}, {"lambda-dual", 100},
      {"idempotent", 100}, {"witness", 1},   {"roundtrip", 20}, {"strassen", 500},
      {"algebra", 10},   {"naturality", 30}, {"adn-components", 30}};
  auto it = counts.find(suite);
  if (it == counts.end()) throw std::invalid_argument("unknown suite: " + suite);
  return it->second;
}

SuiteReport run_suite(const std::string& name, const std::vector<PrevKind>& kinds, Flavor flavor,
                      const SuiteConfig& cfg) {
  default_instances(name);
  if (name == "monad") {
    std::vector<MonadTag> tags{MonadTag::smyth(), MonadTag::hoare(), MonadTag::plotkin(), MonadTag::val(flavor)};
    for (PrevKind k : kinds) tags.push_back(MonadTag::prev(k, flavor));
    return run_monad_laws(tags, cfg);
  }
  if (name == "strassen") return run_strassen(flavor, cfg);
  if (name == "adn-components") return run_adn_components(flavor, cfg);
  SuiteReport report{name, {}};
  for (PrevKind k : kinds) {
    Case c{k, flavor};
    if (name == "retraction") report.append(run_retraction_laws(c, cfg));
    else if (name == "weaklaw") report.append(run_weak_law(c, cfg));
    else if (name == "lambda-dual") report.append(run_lambda_dual(c, cfg));
    else if (name == "idempotent") report.append(run_idempotent(c, cfg));
    else if (name == "witness") report.append(run_witness_search(c, cfg));
    else if (name == "roundtrip") report.append(run_roundtrip(c, cfg));
    else if (name == "algebra") report.append(run_algebra_checks(c, cfg));
    else if (name == "naturality") report.append(run_naturality(c, cfg));
  }
  return report;
}

MutationDetection detect_mutation(Mutation m, const SuiteConfig& cfg) {
  // Unrestricted mass first for the monad laws, so a lost term shows up as
  // an unequal pair rather than a mass violation.
  static const std::vector<std::pair<std::string, Flavor>> order{
      {"monad", Flavor::All},      {"retraction", Flavor::One}, {"roundtrip", Flavor::One},
      {"idempotent", Flavor::One}, {"weaklaw", Flavor::One},    {"lambda-dual", Flavor::One}};
  const std::vector<PrevKind> kinds{PrevKind::DN, PrevKind::AN, PrevKind::ADN};
  ScopedMutation scope(m);
  MutationDetection result{m, false, "", {}};
  // A failure with both sides on record beats one that only raised.
  for (const auto& [name, flavor] : order) {
    SuiteReport report = run_suite(name, kinds, flavor, cfg);
    for (const auto& eq : report.equations) {
      if (eq.failures == 0) continue;
      bool compared = eq.witness && eq.witness->contains("lhs");
      if (!result.detected || compared) {
        result.detected = true;
        result.suite = name;
        result.failing = eq;
      }
      if (compared) return result;
    }
  }
  return result;
}

}  // namespace monadforge
