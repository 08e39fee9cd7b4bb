#include <chrono>
#include <sstream>
#include <thread>

#include "monadforge/lawsuite.hpp"

namespace monadforge {

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& e : equations) n += e.failures;
  return n;
}

int SuiteReport::instances() const {
  int n = 0;
  for (const auto& e : equations) n += e.instances;
  return n;
}

void SuiteReport::append(const SuiteReport& other) {
  equations.insert(equations.end(), other.equations.begin(), other.equations.end());
}

json to_json(const EquationReport& r, bool timing) {
  json j = json::object();
  j["equation"] = r.equation;
  j["case"] = r.case_name;
  j["flavor"] = r.flavor;
  j["instances"] = r.instances;
  j["failures"] = r.failures;
  j["witness"] = r.witness ? *r.witness : json(nullptr);
  if (timing) j["millis"] = r.millis;
  return j;
}

json to_json(const SuiteReport& r, bool timing) {
  json eqs = json::array();
  for (const auto& e : r.equations) eqs.push_back(to_json(e, timing));
  json j = json::object();
  j["suite"] = r.suite;
  j["failures"] = r.failures();
  j["equations"] = std::move(eqs);
  return j;
}

std::string to_text(const SuiteReport& r, bool timing) {
  std::ostringstream out;
  for (const auto& e : r.equations) {
    out << (e.failures == 0 ? "PASS " : "FAIL ") << r.suite << ' ' << e.equation << ' ' << e.case_name << ' '
        << e.flavor << ' ' << (e.instances - e.failures) << '/' << e.instances;
    if (timing) out << ' ' << e.millis << "ms";
    out << '\n';
    if (e.failures > 0 && e.witness) out << "  witness: " << e.witness->dump() << '\n';
  }
  return out.str();
}

Outcome compare(const SpacePtr& space, const Element& lhs, const Element& rhs,
                const std::vector<std::pair<std::string, std::pair<SpacePtr, Element>>>& inputs) {
  std::string error;
  try {
    if (equal_elements(*space, lhs, rhs)) return {};
  } catch (const std::exception& ex) {
    error = ex.what();
  }
  json in = json::object();
  for (const auto& [name, value] : inputs) in[name] = show(*value.first, value.second);
  json w = json::object();
  w["inputs"] = std::move(in);
  w["lhs"] = show(*space, lhs);
  w["rhs"] = show(*space, rhs);
  if (!error.empty()) w["error"] = error;
  return {false, std::move(w)};
}

namespace {

Outcome run_instance(const std::string& stream, const Equation& eq, std::uint64_t seed, int index,
                     const SuiteConfig& cfg) {
  Rng rng = Rng::derive(seed, stream, static_cast<std::uint64_t>(index));
  PosetPtr poset = random_base(rng, cfg.max_base_size);
  Outcome out;
  try {
    out = eq.check(rng, Space::base(poset));
  } catch (const std::exception& ex) {
    out.ok = false;
    out.witness = json::object();
    out.witness["error"] = ex.what();
  }
  if (!out.ok) {
    json w = json::object();
    w["instance"] = index;
    w["poset"] = poset_to_json(*poset);
    for (auto& [k, v] : out.witness.items()) w[k] = v;
    out.witness = std::move(w);
  }
  return out;
}

}  // namespace

EquationReport run_equation(const std::string& suite, const Equation& eq, const std::string& case_name,
                            const std::string& flavor, const SuiteConfig& cfg, int default_count) {
  EquationReport report{eq.id, case_name, flavor, cfg.instances > 0 ? cfg.instances : default_count, 0, {}, 0};
  const std::string stream = suite + "/" + eq.id + "/" + case_name + "/" + flavor;
  auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(static_cast<std::size_t>(report.instances));
  int workers = std::max(1, std::min(cfg.parallelism, report.instances));
  if (workers == 1) {
    for (int i = 0; i < report.instances; ++i) outcomes[static_cast<std::size_t>(i)] = run_instance(stream, eq, cfg.seed, i, cfg);
  } else {
    Mutation mutation = active_mutation();
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        ScopedMutation scoped(mutation);
        for (int i = w; i < report.instances; i += workers) {
          outcomes[static_cast<std::size_t>(i)] = run_instance(stream, eq, cfg.seed, i, cfg);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& o : outcomes) {
    if (o.ok) continue;
    if (report.failures++ == 0) report.witness = std::move(o.witness);
  }
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

}  // namespace monadforge
