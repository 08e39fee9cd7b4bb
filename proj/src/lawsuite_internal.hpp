#pragma once

#include "monadforge/lawsuite.hpp"

namespace monadforge::lawsuite_detail {

inline Element draw(const SpacePtr& space, Rng& rng, const SuiteConfig& cfg) {
  return random_element(*space, rng, cfg.budget);
}

inline SuiteReport run_all(const std::string& suite, const std::vector<Equation>& eqs, const std::string& case_name,
                           const std::string& flavor, const SuiteConfig& cfg) {
  SuiteReport report{suite, {}};
  for (const auto& eq : eqs) {
    if (eq.input_depth > cfg.max_depth) continue;
    report.equations.push_back(run_equation(suite, eq, case_name, flavor, cfg, default_instances(suite)));
  }
  return report;
}

}  // namespace monadforge::lawsuite_detail
