#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monadforge/lawsuite.hpp"

using namespace monadforge;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 1;
  std::string case_name = "all";
  std::string flavor = "one";
  std::vector<std::string> suites;
  std::string mutate;
  int instances = 0;
  int max_base_size = 4;
  int max_generators = 3;
  int max_depth = 4;
  std::string output = "text";
  int parallelism = 1;
  bool ci = false;
  bool timing = false;
  // gen
  std::string kind = "poset";
  int n = 4;
  std::string out_file;
  // lambda
  std::string input;
};

std::vector<PrevKind> kinds_of(const std::string& name) {
  if (name == "all") return {PrevKind::DN, PrevKind::AN, PrevKind::ADN};
  auto k = parse_prev_kind(name);
  if (!k) throw UsageError("unknown case: " + name);
  return {*k};
}

std::vector<Flavor> flavors_of(const std::string& name) {
  if (name == "every") return {Flavor::All, Flavor::Sub1, Flavor::One};
  auto f = parse_flavor(name);
  if (!f) throw UsageError("unknown flavor: " + name);
  return {*f};
}

SuiteConfig suite_config(const Options& o) {
  if (o.max_base_size < 1 || o.max_base_size > 6) throw UsageError("--max-base-size must be in 1..6");
  if (o.max_generators < 1 || o.max_generators > 4) throw UsageError("--max-generators must be in 1..4");
  if (o.max_depth < 0 || o.max_depth > 4) throw UsageError("--max-depth must be in 0..4");
  if (o.instances < 0) throw UsageError("--instances must be nonnegative");
  if (o.parallelism < 1) throw UsageError("--parallelism must be positive");
  SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.instances = o.instances;
  cfg.max_base_size = o.max_base_size;
  cfg.budget.max_generators = o.max_generators;
  cfg.budget.max_atoms = o.max_generators;
  cfg.max_depth = o.max_depth;
  cfg.parallelism = o.parallelism;
  return cfg;
}

void emit(const Options& o, const json& j) {
  if (o.out_file.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(o.out_file);
  if (!out) throw std::ios_base::failure("cannot write " + o.out_file);
  out << j.dump(2) << "\n";
}

int cmd_gen(const Options& o) {
  Rng rng = Rng::derive(o.seed, "gen/" + o.kind, 0);
  if (o.kind == "poset") {
    if (o.n < 1 || o.n > 8) throw UsageError("--n must be in 1..8");
    emit(o, poset_to_json(standard_poset(PosetKind::Random, o.n, rng.next())));
    return kOk;
  }
  Case c{kinds_of(o.case_name == "all" ? "DN" : o.case_name).front(), flavors_of(o.flavor).front()};
  PosetPtr poset = std::make_shared<const FinitePoset>(standard_poset(PosetKind::Random, o.n, rng.next()));
  SpacePtr x = Space::base(poset);
  SpacePtr space;
  if (o.kind == "xi") space = c.t_of(c.s_of(x));
  else if (o.kind == "valuation") space = c.t_of(x);
  else if (o.kind == "hyperspace") space = c.s_of(x);
  else if (o.kind == "prevision") space = c.u_of(x);
  else if (o.kind == "st") space = c.st_of(x);
  else throw UsageError("unknown --kind: " + o.kind);
  GenBudget budget{o.max_generators, o.max_generators, 8};
  Element e = random_element(*space, rng, budget);
  json j = json::object();
  j["case"] = c.name();
  j["flavor"] = to_string(c.flavor);
  j["poset"] = poset_to_json(*poset);
  j["space"] = space_to_json(*space);
  j[o.kind == "xi" ? "xi" : "element"] = element_to_json(*space, e);
  emit(o, j);
  return kOk;
}

std::string describe_part(const Space& child, const Part& part, const std::string& side) {
  std::ostringstream out;
  for (std::size_t i = 0; i < part.gens.size(); ++i) out << (i ? ", " : "") << show(child, part.gens[i]);
  out << " (" << (part.convex ? "convex " : "") << side << ")";
  return out.str();
}

int cmd_lambda(const Options& o) {
  std::ifstream in(o.input);
  if (!in) throw std::ios_base::failure("cannot read " + o.input);
  json input = json::parse(in);
  auto kind = parse_prev_kind(input.value("case", "DN"));
  auto flavor = parse_flavor(input.value("flavor", "one"));
  if (!kind || !flavor) throw FormatError("bad case or flavor in input");
  Case c{*kind, *flavor};
  PosetPtr poset = std::make_shared<const FinitePoset>(poset_from_json(input.at("poset")));
  SpacePtr x = Space::base(poset);
  SpacePtr ts = c.t_of(c.s_of(x));
  Element xi = element_from_json(*ts, input.at("xi"));
  LambdaOutput out = lambda(c, x, xi);
  SpacePtr tx = c.t_of(x);
  SpacePtr st = c.st_of(x);
  std::vector<std::pair<std::string, Part>> parts;
  if (c.kind == PrevKind::ADN) {
    for (const auto& p : out.value.up_parts()) parts.emplace_back("up", p);
    for (const auto& p : out.value.down_parts()) parts.emplace_back("down", p);
  } else {
    for (const auto& p : out.value.parts()) parts.emplace_back(c.kind == PrevKind::DN ? "up" : "down", p);
  }
  if (o.output == "json") {
    json j = json::object();
    j["case"] = c.name();
    j["flavor"] = to_string(c.flavor);
    j["lambda"] = element_to_json(*st, out.value);
    j["text"] = show(*st, out.value);
    json checks = json::array();
    for (const auto& [side, part] : parts) {
      for (const auto& g : part.gens) {
        checks.push_back({{"generator", show(*tx, g)}, {"oracle", lambda_membership_oracle(c, x, xi, g)}});
      }
    }
    j["oracle"] = checks;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "lambda: " << show(*st, out.value) << "\n";
  for (const auto& [side, part] : parts) std::cout << "gens: " << describe_part(*tx, part, side) << "\n";
  bool all_in = true;
  for (const auto& [side, part] : parts) {
    for (const auto& g : part.gens) {
      bool in_oracle = lambda_membership_oracle(c, x, xi, g);
      all_in = all_in && in_oracle;
      std::cout << "oracle " << show(*tx, g) << ": " << (in_oracle ? "member" : "NOT member") << "\n";
    }
  }
  return all_in ? kOk : kFailure;
}

void print_report(const Options& o, const SuiteReport& r, json& collected) {
  if (o.output == "json") collected.push_back(to_json(r, o.timing));
  else std::cout << to_text(r, o.timing);
}

int cmd_check(const Options& o, bool seed_given) {
  if (o.ci && !seed_given) throw UsageError("--ci requires an explicit seed (--seed or MONADFORGE_SEED)");
  if (o.output != "text" && o.output != "json") throw UsageError("--output must be text or json");
  SuiteConfig cfg = suite_config(o);
  std::vector<PrevKind> kinds = kinds_of(o.case_name);
  std::vector<Flavor> flavors = flavors_of(o.flavor);
  std::vector<std::string> suites = o.suites.empty() ? suite_names() : o.suites;
  for (const auto& s : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw UsageError("unknown suite: " + s);
    }
  }
  Mutation mutation = Mutation::None;
  if (!o.mutate.empty()) {
    auto m = parse_mutation(o.mutate);
    if (!m) throw UsageError("unknown mutation: " + o.mutate);
    mutation = *m;
  }

  json collected = json::array();
  int failures = 0;
  if (mutation != Mutation::None && o.suites.empty()) {
    MutationDetection d = detect_mutation(mutation, cfg);
    if (o.output == "json") {
      json j = {{"mutation", to_string(mutation)}, {"detected", d.detected}};
      if (d.detected) {
        j["suite"] = d.suite;
        j["failing"] = to_json(d.failing, o.timing);
      }
      std::cout << j.dump(2) << "\n";
    } else if (d.detected) {
      SuiteReport one{d.suite, {d.failing}};
      std::cout << "mutation " << to_string(mutation) << " detected by suite " << d.suite << "\n" << to_text(one, o.timing);
    } else {
      std::cout << "mutation " << to_string(mutation) << " not detected\n";
    }
    return d.detected ? kFailure : kOk;
  }

  ScopedMutation scope(mutation);
  for (const auto& s : suites) {
    for (Flavor f : flavors) {
      SuiteReport r = run_suite(s, kinds, f, cfg);
      failures += r.failures();
      print_report(o, r, collected);
    }
  }
  if (o.output == "json") {
    json doc = {{"seed", o.seed}, {"failures", failures}, {"suites", collected}};
    std::cout << doc.dump(2) << "\n";
  }
  return failures == 0 ? kOk : kFailure;
}

int cmd_demo(const Options& o) {
  for (PrevKind k : kinds_of(o.case_name)) {
    Case c{k, flavors_of(o.flavor).front()};
    auto w = find_nondistributivity_witness(c);
    if (!w) {
      std::cout << c.name() << ": no witness found\n";
      continue;
    }
    SpacePtr x = Space::base(w->poset);
    std::cout << std::boolalpha << c.name() << " (" << to_string(c.flavor) << ") on " << w->poset->size() << " points\n"
              << "  Q                  = " << show(*c.s_of(x), w->q) << "\n"
              << "  lambda(delta_Q)    = " << show(*c.st_of(x), w->lambda_value) << "\n"
              << "  image of Q         = " << show(*c.st_of(x), w->unit_image) << "\n"
              << "  separating         = " << show(*c.t_of(x), w->separating) << "\n"
              << "  in lambda (LP, opens)   = " << w->in_lambda_by_formula << ", " << w->in_lambda_by_enumeration << "\n"
              << "  in image (coupling, opens) = " << w->in_unit_by_coupling << ", " << w->in_unit_by_enumeration << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Executable checks for weak distributive laws between hyperspace and valuation monads"};
  app.require_subcommand(1);
  // Keys go under a [check] section (or as check.key); flags win over the file.
  app.set_config("--config", "", "TOML-style configuration file");
  app.allow_config_extras(CLI::config_extras_mode::error);
  Options o;

  auto add_case = [&](CLI::App* sub) {
    sub->add_option("--case", o.case_name, "DN, AN, ADN or all")->capture_default_str();
    sub->add_option("--flavor", o.flavor, "all, sub1, one, or every to loop over the three")->capture_default_str();
  };
  auto add_seed = [&](CLI::App* sub) {
    return sub->add_option("--seed", o.seed, "Seed")->envname("MONADFORGE_SEED")->capture_default_str();
  };

  CLI::App* gen = app.add_subcommand("gen", "Emit a seeded poset or element as JSON");
  add_seed(gen);
  add_case(gen);
  gen->add_option("--kind", o.kind, "poset, valuation, hyperspace, prevision, st or xi")->capture_default_str();
  gen->add_option("--n", o.n, "Number of points")->capture_default_str();
  gen->add_option("--max-generators", o.max_generators)->capture_default_str();
  gen->add_option("-o,--out", o.out_file, "Write to a file instead of stdout");

  CLI::App* check = app.add_subcommand("check", "Run law suites");
  CLI::Option* seed_opt = add_seed(check);
  add_case(check);
  check->add_option("--suite", o.suites, "Suites to run (repeatable, comma separated)")->delimiter(',');
  check->add_option("--mutate", o.mutate, "drop-convex, drop-mult-term or swap-minsup");
  check->add_option("--instances", o.instances, "Instances per equation (0: suite default)")->capture_default_str();
  check->add_option("--max-base-size", o.max_base_size)->capture_default_str();
  check->add_option("--max-generators", o.max_generators)->capture_default_str();
  check->add_option("--max-depth", o.max_depth)->capture_default_str();
  check->add_option("--output", o.output, "text or json")->capture_default_str();
  check->add_option("--parallelism", o.parallelism)->capture_default_str();
  check->add_flag("--ci", o.ci, "Require an explicit seed");
  check->add_flag("--timing", o.timing, "Include wall time per equation");

  CLI::App* lam = app.add_subcommand("lambda", "Compute lambda on a JSON input");
  lam->add_option("input", o.input, "JSON file with case, flavor, poset and xi")->required();
  lam->add_option("--output", o.output, "text or json")->capture_default_str();

  CLI::App* demo = app.add_subcommand("demo", "Print a non-distributivity witness per case");
  add_case(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*check) return cmd_check(o, seed_opt->count() > 0);
    if (*lam) return cmd_lambda(o);
    if (*demo) return cmd_demo(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpaceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
