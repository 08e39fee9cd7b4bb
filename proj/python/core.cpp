#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monadforge/lawsuite.hpp"

namespace py = pybind11;
using namespace monadforge;

namespace {

Case parse_case(const std::string& kind, const std::string& flavor) {
  auto k = parse_prev_kind(kind);
  auto f = parse_flavor(flavor);
  if (!k) throw py::value_error("unknown case: " + kind);
  if (!f) throw py::value_error("unknown flavor: " + flavor);
  return Case{*k, *f};
}

std::vector<PrevKind> parse_kinds(const std::string& kind) {
  if (kind == "all") return {PrevKind::DN, PrevKind::AN, PrevKind::ADN};
  auto k = parse_prev_kind(kind);
  if (!k) throw py::value_error("unknown case: " + kind);
  return {*k};
}

SpacePtr space_of(const std::string& space_json) { return space_from_json(json::parse(space_json)); }

PosetPtr poset_of(const std::string& poset_json) {
  return std::make_shared<const FinitePoset>(poset_from_json(json::parse(poset_json)));
}

std::string check(const std::string& suite, const std::string& kind, const std::string& flavor, std::uint64_t seed,
                  int instances, int max_base_size, int max_generators, int max_depth, int parallelism,
                  const std::string& mutation) {
  auto f = parse_flavor(flavor);
  if (!f) throw py::value_error("unknown flavor: " + flavor);
  auto m = parse_mutation(mutation);
  if (!m) throw py::value_error("unknown mutation: " + mutation);
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.instances = instances;
  cfg.max_base_size = max_base_size;
  cfg.budget.max_generators = max_generators;
  cfg.budget.max_atoms = max_generators;
  cfg.max_depth = max_depth;
  cfg.parallelism = parallelism;
  auto kinds = parse_kinds(kind);
  py::gil_scoped_release unlocked;
  ScopedMutation scope(*m);
  return to_json(run_suite(suite, kinds, *f, cfg)).dump();
}

std::string lambda_json(const std::string& kind, const std::string& flavor, const std::string& poset_json,
                        const std::string& xi_json) {
  Case c = parse_case(kind, flavor);
  SpacePtr x = Space::base(poset_of(poset_json));
  SpacePtr ts = c.t_of(c.s_of(x));
  Element xi = element_from_json(*ts, json::parse(xi_json));
  LambdaOutput out = lambda(c, x, xi);
  SpacePtr st = c.st_of(x);
  json j = json::object();
  j["lambda"] = element_to_json(*st, out.value);
  j["text"] = show(*st, out.value);
  json combos = json::array();
  for (const auto& v : out.combinations) combos.push_back(show(*c.t_of(x), v));
  j["combinations"] = combos;
  return j.dump();
}

py::object witness_json(const std::string& kind, const std::string& flavor) {
  Case c = parse_case(kind, flavor);
  auto w = find_nondistributivity_witness(c);
  if (!w) return py::none();
  return py::str(to_json(c, *w).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks for weak distributive laws between hyperspace and valuation monads";

  py::register_exception<SpaceError>(m, "SpaceError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<RepresentationError>(m, "RepresentationError", PyExc_RuntimeError);
  py::register_exception<LambdaError>(m, "LambdaError", PyExc_RuntimeError);

  m.def("suite_names", &suite_names);
  m.def("default_instances", &default_instances, py::arg("suite"));
  m.def("check", &check, py::arg("suite"), py::arg("case") = "all", py::arg("flavor") = "one", py::arg("seed") = 1,
        py::arg("instances") = 0, py::arg("max_base_size") = 4, py::arg("max_generators") = 3,
        py::arg("max_depth") = 4, py::arg("parallelism") = 1, py::arg("mutation") = "none",
        "Run a suite; returns the report as a JSON string.");
  m.def("lambda_", &lambda_json, py::arg("case"), py::arg("flavor"), py::arg("poset"), py::arg("xi"));
  m.def("witness", &witness_json, py::arg("case") = "DN", py::arg("flavor") = "one");
  m.def(
      "detect_mutation",
      [](const std::string& name, std::uint64_t seed) {
        auto mut = parse_mutation(name);
        if (!mut) throw py::value_error("unknown mutation: " + name);
        SuiteConfig cfg;
        cfg.seed = seed;
        MutationDetection d = [&] {
          py::gil_scoped_release unlocked;
          return detect_mutation(*mut, cfg);
        }();
        json j = {{"mutation", to_string(d.mutation)}, {"detected", d.detected}, {"suite", d.suite}};
        if (d.detected) j["failing"] = to_json(d.failing);
        return j.dump();
      },
      py::arg("mutation"), py::arg("seed") = 1);
  m.def(
      "canonicalize",
      [](const std::string& space, const std::string& e) {
        SpacePtr s = space_of(space);
        return element_to_json(*s, canonicalize(*s, element_from_json(*s, json::parse(e)))).dump();
      },
      py::arg("space"), py::arg("element"));
  m.def(
      "show",
      [](const std::string& space, const std::string& e) {
        SpacePtr s = space_of(space);
        return show(*s, element_from_json(*s, json::parse(e)));
      },
      py::arg("space"), py::arg("element"));
  m.def(
      "leq",
      [](const std::string& space, const std::string& a, const std::string& b) {
        SpacePtr s = space_of(space);
        return leq_elements(*s, element_from_json(*s, json::parse(a)), element_from_json(*s, json::parse(b)));
      },
      py::arg("space"), py::arg("a"), py::arg("b"));
  m.def(
      "equal",
      [](const std::string& space, const std::string& a, const std::string& b) {
        SpacePtr s = space_of(space);
        return equal_elements(*s, element_from_json(*s, json::parse(a)), element_from_json(*s, json::parse(b)));
      },
      py::arg("space"), py::arg("a"), py::arg("b"));
  m.def(
      "stochastic_leq",
      [](const std::string& space, const std::string& a, const std::string& b, const std::string& method) {
        SpacePtr s = space_of(space);
        lp::StochasticMethod how;
        if (method == "coupling") how = lp::StochasticMethod::Coupling;
        else if (method == "enumerate") how = lp::StochasticMethod::Enumerate;
        else throw py::value_error("method must be coupling or enumerate");
        return lp::stochastic_leq(*s, element_from_json(*s, json::parse(a)), element_from_json(*s, json::parse(b)), how);
      },
      py::arg("space"), py::arg("a"), py::arg("b"), py::arg("method") = "coupling");
  m.def(
      "random_element",
      [](const std::string& space, std::uint64_t seed, int size_budget) {
        SpacePtr s = space_of(space);
        return element_to_json(*s, random_element(*s, seed, size_budget)).dump();
      },
      py::arg("space"), py::arg("seed"), py::arg("size_budget") = 3);
  m.def(
      "retraction_r",
      [](const std::string& kind, const std::string& flavor, const std::string& poset, const std::string& q) {
        Case c = parse_case(kind, flavor);
        SpacePtr x = Space::base(poset_of(poset));
        Element f = retraction_r(c, x, element_from_json(*c.st_of(x), json::parse(q)));
        return element_to_json(*c.u_of(x), f).dump();
      },
      py::arg("case"), py::arg("flavor"), py::arg("poset"), py::arg("q"));
  m.def(
      "retraction_s",
      [](const std::string& kind, const std::string& flavor, const std::string& poset, const std::string& f) {
        Case c = parse_case(kind, flavor);
        SpacePtr x = Space::base(poset_of(poset));
        Element q = retraction_s(c, x, element_from_json(*c.u_of(x), json::parse(f)));
        return element_to_json(*c.st_of(x), q).dump();
      },
      py::arg("case"), py::arg("flavor"), py::arg("poset"), py::arg("f"));
}
