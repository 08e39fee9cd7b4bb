#pragma once

#include <cstdint>
#include <vector>

#include "monadforge/rng.hpp"
#include "monadforge/space.hpp"

namespace monadforge {

struct GenBudget {
  int max_generators = 3;  // per hyperspace or prevision node
  int max_atoms = 3;       // per valuation node
  int max_denominator = 8;
};

// Canonical random element of `space`; weights have denominators at most
// budget.max_denominator and respect the flavor's mass constraint. Budgets
// shrink by one per level of nesting.
Element random_element(const Space& space, Rng& rng, const GenBudget& budget = {});
Element random_element(const Space& space, std::uint64_t seed, int size_budget);

// Valuation over `child` with exactly `atoms` draws (duplicates merge).
Element random_valuation(const Space& child, Flavor flavor, Rng& rng, const GenBudget& budget);

// Random monotone function: a positive combination of up-set indicators.
LSCFunction random_lsc(const PosetPtr& poset, Rng& rng);

// Random monotone map between posets (constant as a last resort).
std::vector<int> random_monotone_assignment(const FinitePoset& src, const FinitePoset& dst, Rng& rng);

// A small base poset with 1..max_size points and a randomly chosen shape.
PosetPtr random_base(Rng& rng, int max_size);

}  // namespace monadforge
