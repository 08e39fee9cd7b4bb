#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monadforge/distlaw.hpp"
#include "monadforge/json_io.hpp"
#include "monadforge/mutation.hpp"
#include "monadforge/random.hpp"
#include "monadforge/rng.hpp"

namespace monadforge {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int instances = 0;  // 0 picks the suite's default
  int max_base_size = 4;
  GenBudget budget{};
  int max_depth = 4;  // equations whose inputs sit deeper are skipped
  int parallelism = 1;
};

struct EquationReport {
  std::string equation;
  std::string case_name;
  std::string flavor;
  int instances = 0;
  int failures = 0;
  std::optional<json> witness;
  std::int64_t millis = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<EquationReport> equations;

  int failures() const;
  int instances() const;
  void append(const SuiteReport& other);
};

json to_json(const EquationReport& r, bool timing = false);
json to_json(const SuiteReport& r, bool timing = false);
// One line per equation: "PASS <suite> <equation> <case> <flavor> n/n".
std::string to_text(const SuiteReport& r, bool timing = false);

// One instance of an equation: draws its inputs and reports either success
// or a JSON counterexample.
struct Outcome {
  bool ok = true;
  json witness;
};
using InstanceCheck = std::function<Outcome(Rng& rng, const SpacePtr& base)>;

struct Equation {
  std::string id;
  InstanceCheck check;
  int input_depth = 1;
};

// Runs `eq` on cfg.instances (or `default_instances`) seeded instances; the
// instance stream depends only on the seed, suite, equation, case and flavor.
EquationReport run_equation(const std::string& suite, const Equation& eq, const std::string& case_name,
                            const std::string& flavor, const SuiteConfig& cfg, int default_instances);

// Compares two sides in `space`; the witness records the inputs and both sides.
Outcome compare(const SpacePtr& space, const Element& lhs, const Element& rhs,
                const std::vector<std::pair<std::string, std::pair<SpacePtr, Element>>>& inputs);

// Random monotone Kleisli map x -> tag(y), tabled on the points of x.
ElementMap random_kleisli(const MonadTag& tag, const SpacePtr& x, const SpacePtr& y, Rng& rng);

SuiteReport run_monad_laws(const std::vector<MonadTag>& tags, const SuiteConfig& cfg);
SuiteReport run_retraction_laws(const Case& c, const SuiteConfig& cfg);
SuiteReport run_weak_law(const Case& c, const SuiteConfig& cfg);
SuiteReport run_lambda_dual(const Case& c, const SuiteConfig& cfg);
SuiteReport run_idempotent(const Case& c, const SuiteConfig& cfg);
SuiteReport run_roundtrip(const Case& c, const SuiteConfig& cfg);
SuiteReport run_strassen(Flavor flavor, const SuiteConfig& cfg);
SuiteReport run_naturality(const Case& c, const SuiteConfig& cfg);
SuiteReport run_adn_components(Flavor flavor, const SuiteConfig& cfg);

// An algebra of the combined monad presented as (alpha, beta, gamma) on a
// carrier; gamma may be left empty when only the diagram is to be checked.
struct AlgebraStructure {
  SpacePtr carrier;
  ElementMap alpha;  // S(carrier) -> carrier
  ElementMap beta;   // T(carrier) -> carrier
  std::optional<ElementMap> gamma;  // U(carrier) -> carrier
};
using AlgebraFactory = std::function<AlgebraStructure(Rng& rng, const SpacePtr& base)>;

// The free algebra on the base: carrier U(base), gamma the multiplication,
// alpha = gamma after i, beta = gamma after j.
AlgebraStructure free_algebra(const Case& c, const SpacePtr& base);
SuiteReport run_algebra_checks(const Case& c, const SuiteConfig& cfg);
SuiteReport run_algebra_checks(const Case& c, const AlgebraFactory& factory, const SuiteConfig& cfg);

// A base, a hyperspace element Q and a valuation that lies in lambda(delta_Q)
// but not in the image of Q under the unit of T, with each membership decided
// by two independent routes.
struct NonDistributivityWitness {
  PosetPtr poset;
  Element q;
  Element lambda_value;
  Element unit_image;
  Element separating;
  bool in_lambda_by_formula = false;
  bool in_lambda_by_enumeration = false;
  bool in_unit_by_coupling = false;
  bool in_unit_by_enumeration = false;

  bool verified() const {
    return in_lambda_by_formula && in_lambda_by_enumeration && !in_unit_by_coupling && !in_unit_by_enumeration;
  }
};
json to_json(const Case& c, const NonDistributivityWitness& w);

// Searches the given bases in order, trying every hyperspace element of each.
std::optional<NonDistributivityWitness> find_nondistributivity_witness(const Case& c,
                                                                       const std::vector<PosetPtr>& bases);
// Default search: the 2-point antichain first, then small standard posets.
std::optional<NonDistributivityWitness> find_nondistributivity_witness(const Case& c);
// Expects a witness on the 2-point antichain and none on chains of size <= 4.
SuiteReport run_witness_search(const Case& c, const SuiteConfig& cfg);

const std::vector<std::string>& suite_names();
int default_instances(const std::string& suite);
// Runs a named suite for the given cases and flavor. Suites indexed by flavor
// alone (monad, strassen, adn-components) ignore `kinds`.
SuiteReport run_suite(const std::string& name, const std::vector<PrevKind>& kinds, Flavor flavor,
                      const SuiteConfig& cfg);

struct MutationDetection {
  Mutation mutation = Mutation::None;
  bool detected = false;
  std::string suite;
  EquationReport failing;
};
// Runs the suites in order under the mutation until one of them fails.
MutationDetection detect_mutation(Mutation m, const SuiteConfig& cfg);

}  // namespace monadforge
