#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <optional>
#include <set>

#include "fixtures.hpp"
#include "suite.hpp"
#include "toposbench/enumerate.hpp"
#include "toposbench/error.hpp"
#include "toposbench/exponential.hpp"
#include "toposbench/finiteness/notions.hpp"
#include "toposbench/io/model.hpp"
#include "toposbench/io/tm_json.hpp"
#include "toposbench/limits.hpp"
#include "toposbench/logic/eval.hpp"
#include "toposbench/logic/typecheck.hpp"
#include "toposbench/omega.hpp"
#include "toposbench/version.hpp"

#ifndef TOPOSBENCH_FIXTURE_DIR
#define TOPOSBENCH_FIXTURE_DIR ""
#endif

namespace toposbench::cli {

using nlohmann::json;

namespace {

struct Outcome {
  json report;
  int code = kExitOk;
  std::string summary;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownSymbol:
    case ErrorCode::TypeMismatch:
    case ErrorCode::UnboundGround:
    case ErrorCode::UnknownObject:
      return kExitMalformed;
    default:
      return kExitFailure;
  }
}

json error_json(const Error& e) {
  json out{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) out["position"] = s->position();
  return out;
}

json map_json(const NatTrans& m) {
  const FinCategory& cat = *m.source()->base();
  json out = json::object();
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    json table = json::object();
    for (Elem x = 0; x < m.source()->size(c); ++x) {
      table[m.source()->element_name(c, x)] = m.target()->element_name(c, m(c, x));
    }
    out[cat.object_name(c)] = table;
  }
  return out;
}

json subfunctor_json(const Subfunctor& s) {
  const FinCategory& cat = *s.host()->base();
  json out = json::object();
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    json xs = json::array();
    for (Elem x : s.elements(c)) xs.push_back(s.host()->element_name(c, x));
    out[cat.object_name(c)] = xs;
  }
  return out;
}

json truth_json(const NatTrans& value, const OmegaStructure& omega) {
  const FinCategory& cat = *omega.base();
  json out = json::object();
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    out[cat.object_name(c)] = omega.cosieve_name(c, omega.cosieve(c, value(c, 0)));
  }
  return out;
}

json stage_sizes(const Subfunctor& s) {
  const FinCategory& cat = *s.host()->base();
  json out = json::object();
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    out[cat.object_name(c)] = {{"of", s.host()->size(c)}, {"size", s.size(c)}};
  }
  return out;
}

std::string default_base(const io::Model& model, const std::string& requested) {
  if (!requested.empty()) return requested;
  if (model.category) return "category";
  if (model.monoids.size() == 1) return model.monoids.begin()->first;
  throw Error(ErrorCode::UnknownObject, "the model has several bases; pass --base");
}

PresheafRef resolve_object(const io::Model& model, const std::string& name, const std::string& base) {
  if (name == "Omega" && !model.presheaves.count(name)) {
    return OmegaStructure::build(model.base(default_base(model, base)))->object();
  }
  return model.presheaf(name);
}

bool is_tm_file(const std::string& text) {
  try {
    const json j = json::parse(text);
    return j.is_object() && j.contains("delta");
  } catch (const json::parse_error&) {
    return false;
  }
}

// ---------------------------------------------------------------- validate

Outcome cmd_validate(const std::string& path) {
  Outcome o;
  o.report["file"] = path;
  const std::string text = io::read_file(path);
  try {
    if (is_tm_file(text)) {
      const machines::TMSpec tm = io::parse_tm(text);
      o.report["kind"] = "tm";
      o.report["deterministic"] = machines::is_deterministic(tm);
      o.report["states"] = tm.states.size();
      o.report["symbols"] = tm.alphabet.size();
    } else {
      const io::Model model = io::parse_model(text);
      o.report["kind"] = "model";
      o.report["presheaves"] = model.presheaves.size();
      o.report["monoids"] = model.monoids.size();
      o.report["morphisms"] = model.morphisms.size();
      o.report["subobjects"] = model.subobjects.size();
      o.report["category"] = static_cast<bool>(model.category);
    }
    o.report["valid"] = true;
    o.summary = path + ": valid";
  } catch (const Error& e) {
    if (exit_code_for(e.code()) == kExitMalformed) throw;
    o.report["valid"] = false;
    o.report["violation"] = error_json(e);
    o.code = kExitFailure;
    o.summary = path + ": " + e.what();
  }
  return o;
}

// ---------------------------------------------------------------- monos

Outcome cmd_monos(const std::string& path, const std::string& from, const std::string& to) {
  const io::Model model = io::load_model(path);
  const auto monos = enumerate_nat_trans(model.presheaf(from), model.presheaf(to), NatFilter::Mono);
  Outcome o;
  o.report["model"] = path;
  o.report["from"] = from;
  o.report["to"] = to;
  o.report["count"] = monos.size();
  o.report["monos"] = json::array();
  for (const auto& m : monos) o.report["monos"].push_back(map_json(m));
  o.summary = std::to_string(monos.size()) + " monomorphism(s) " + from + " -> " + to;
  return o;
}

// ---------------------------------------------------------------- finiteness

Subfunctor union_of_global_elements(const PresheafRef& a) {
  std::vector<std::vector<bool>> part(a->sizes().size());
  for (ObjectId c = 0; c < part.size(); ++c) part[c].assign(a->size(c), false);
  for (const auto& e : global_elements(a)) {
    for (ObjectId c = 0; c < part.size(); ++c) part[c][e(c, 0)] = true;
  }
  return Subfunctor(a, std::move(part));
}

Outcome cmd_finiteness(const std::string& path, const std::string& object, const std::string& notion_text,
                       const std::string& mode_text, const std::string& base) {
  const io::Model model = io::load_model(path);
  const PresheafRef a = resolve_object(model, object, base);
  const auto mode = mode_text == "external" ? finiteness::Mode::External : finiteness::Mode::Internal;
  const auto notion = finiteness::FinitenessNotion::parse(notion_text, mode);
  const auto omega = OmegaStructure::build(a->base());

  Outcome o;
  json& r = o.report;
  r["model"] = path;
  r["object"] = object;
  r["notion"] = notion.name();
  r["mode"] = std::string(finiteness::mode_name(mode));
  bool verdict = false;
  switch (notion.tag) {
    case finiteness::FinitenessNotion::Tag::Dedekind: {
      const auto d = finiteness::dedekind(a, mode);
      verdict = d.verdict;
      if (d.truth) r["truth_value"] = truth_json(d.truth->value, *omega);
      if (mode == finiteness::Mode::External) {
        r["monos"] = d.monos;
        if (d.witness) r["witness"] = map_json(*d.witness);
      }
      break;
    }
    case finiteness::FinitenessNotion::Tag::Kuratowski: {
      if (mode == finiteness::Mode::Internal) {
        const auto k = finiteness::kuratowski(a);
        verdict = k.verdict;
        r["closure"] = stage_sizes(k.closure);
        json failing = json::array();
        for (ObjectId c : k.failing_stages) failing.push_back(a->base()->object_name(c));
        r["failing_stages"] = failing;
        if (a->total_size() <= 2) {
          const auto direct = finiteness::kuratowski_direct(a);
          r["direct_sentence"] = {{"holds", direct.holds}, {"truth_value", truth_json(direct.value, *omega)}};
        }
      } else {
        const Subfunctor covered = union_of_global_elements(a);
        verdict = covered.is_full();
        r["witness"] = subfunctor_json(covered);
      }
      break;
    }
    case finiteness::FinitenessNotion::Tag::Lp: {
      finiteness::SquireOptions options;
      if (mode == finiteness::Mode::External) options.scope = finiteness::SquireScope::Global;
      const auto s = finiteness::squire_lp(a, notion.p, options);
      verdict = s.verdict;
      r["generators"] = stage_sizes(s.generators);
      r["lattice"] = stage_sizes(s.lattice);
      json variants = json::array();
      for (const auto& v : finiteness::squire_variants(a, notion.p)) {
        variants.push_back({{"scope", std::string(finiteness::scope_name(v.scope))},
                            {"satisfaction", std::string(finiteness::satisfaction_name(v.satisfaction))},
                            {"verdict", v.verdict}});
      }
      r["variants"] = variants;
      break;
    }
  }
  r["verdict"] = verdict;
  o.summary = object + " is " + (verdict ? "" : "not ") + notion.name() + "-finite (" +
              std::string(finiteness::mode_name(mode)) + ")";
  return o;
}

// ---------------------------------------------------------------- holds

Outcome cmd_holds(const std::string& path, const std::string& formula, const std::vector<std::string>& binds,
                  const std::string& base) {
  const io::Model model = io::load_model(path);
  logic::Signature sig;
  std::map<std::string, std::string> ground_of;  // presheaf name -> first ground bound to it
  json bindings = json::object();
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::MalformedInput, "--bind expects var=object");
    const std::string var = b.substr(0, eq);
    const std::string object = b.substr(eq + 1);
    const PresheafRef p = resolve_object(model, object, base);
    if (!sig.base) sig.base = p->base();
    if (!same_base(sig.base, p->base())) throw Error(ErrorCode::BaseMismatch, "bindings over different bases");
    sig.bind_ground(var, p);
    ground_of.emplace(object, var);
    bindings[var] = object;
  }
  if (!sig.base) sig.base = model.base(default_base(model, base));
  const auto omega = OmegaStructure::build(sig.base);
  const PresheafRef one = terminal(sig.base);

  json constants = json::object();
  std::vector<std::string> bound_morphisms;
  for (const auto& [name, m] : model.morphisms) {
    const std::string& ends = model.morphism_ends.at(name);
    const auto arrow = ends.find("->");
    const auto s = ground_of.find(ends.substr(0, arrow));
    const auto t = ground_of.find(ends.substr(arrow + 2));
    if (s == ground_of.end() || t == ground_of.end()) continue;
    const auto exp = Exponential::build(m.source(), m.target());
    const ProductCone domain = product(one, m.source());
    const NatTrans name_of = exp->transpose(compose(m, domain.projections[1]), domain);
    const auto type = logic::LType::exp(logic::LType::ground(s->second), logic::LType::ground(t->second));
    sig.bind_constant(name, type, name_of);
    constants[name] = logic::to_string(type);
    bound_morphisms.push_back(name);
  }
  for (const auto& [name, sub] : model.subobjects) {
    const auto g = ground_of.find(model.subobject_hosts.at(name));
    if (g == ground_of.end()) continue;
    const auto power = Exponential::build(sub.host(), omega->object());
    const auto type = logic::LType::power(logic::LType::ground(g->second));
    sig.bind_constant(name, type, logic::subobject_name(sub, *power, *omega));
    constants[name] = logic::to_string(type);
  }

  logic::Evaluator evaluator(std::move(sig));
  const logic::Truth truth = evaluator.holds(formula);

  Outcome o;
  json& r = o.report;
  r["model"] = path;
  r["formula"] = formula;
  r["bindings"] = bindings;
  r["constants"] = constants;
  r["holds"] = truth.holds;
  r["truth_value"] = truth_json(truth.value, *omega);
  json notes = json::array();
  for (std::size_t i = 0; i < bound_morphisms.size(); ++i) {
    for (std::size_t j = i + 1; j < bound_morphisms.size(); ++j) {
      const std::string& f = bound_morphisms[i];
      const std::string& g = bound_morphisms[j];
      if (model.morphism_ends.at(f) != model.morphism_ends.at(g)) continue;
      const bool equal = model.morphism(f) == model.morphism(g);
      notes.push_back(f + " and " + g + " are externally " + (equal ? "equal" : "distinct"));
    }
  }
  r["notes"] = notes;
  o.summary = std::string(truth.holds ? "holds" : "does not hold") + ": " + formula;
  return o;
}

// ---------------------------------------------------------------- tm

json config_json(const machines::TMSpec& tm, const machines::Configuration& c) {
  const io::TapeView view = io::tape_view(tm, c);
  return {{"state", c.state}, {"head", c.head}, {"offset", view.offset}, {"cells", view.cells}};
}

Outcome cmd_tm(const std::string& action, const std::string& path, const std::vector<std::string>& inputs,
               std::size_t budget) {
  const machines::TMSpec tm = io::load_tm(path);
  Outcome o;
  json& r = o.report;
  r["machine"] = path;
  r["action"] = action;
  r["budget"] = budget;
  r["inputs"] = inputs;
  r["fin"] = tm.fin.name();
  if (action == "run") {
    const auto rel = machines::tm_computed_relation(tm, inputs, budget);
    json pairs = json::array();
    for (const auto& [in, out] : rel.pairs) pairs.push_back({in, out});
    r["pairs"] = pairs;
    r["exhausted_inputs"] = rel.exhausted_inputs;
    r["budget_exhausted"] = !rel.exhausted_inputs.empty();
    o.summary = std::to_string(rel.pairs.size()) + " input/output pair(s)";
  } else {
    machines::ConfigSet init;
    for (const auto& x : inputs) init.insert(machines::initial_configuration(tm, x));
    const auto closure = machines::tm_closure(tm, init, budget);
    json configs = json::array();
    for (const auto& c : closure.configs) configs.push_back(config_json(tm, c));
    r["configurations"] = configs;
    r["count"] = closure.configs.size();
    r["budget_exhausted"] = closure.budget_exhausted;
    o.summary = std::to_string(closure.configs.size()) + " configuration(s) in the closure";
  }
  if (r["budget_exhausted"].get<bool>()) o.summary += " (budget exhausted)";
  return o;
}

// ---------------------------------------------------------------- suite

Outcome cmd_suite(const SuiteOptions& options) {
  const SuiteReport s = run_suite(options);
  Outcome o;
  json& r = o.report;
  r["seed"] = options.seed;
  r["random_objects"] = options.random_objects;
  r["fixtures"] = options.fixtures.empty() ? "" : options.fixtures.filename().string();
  if (!options.inject.empty()) r["inject"] = options.inject;
  r["checks"] = s.checks;
  r["notes"] = s.notes;
  r["passed"] = s.passed();
  std::size_t total = 0;
  for (const auto& [name, n] : s.checks) total += n;
  if (s.failure) {
    r["failure"] = {{"property", s.failure->property}, {"instance", s.failure->instance},
                    {"detail", s.failure->detail}};
    o.code = kExitFailure;
    o.summary = "suite failed: " + s.failure->property + " at " + s.failure->instance + ": " + s.failure->detail;
  } else {
    o.summary = "suite passed " + std::to_string(total) + " checks";
  }
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite presheaf topos workbench"};
  app.require_subcommand(1);
  bool timings = false;
  std::string base;
  app.add_flag("--timings", timings, "Include wall-clock timings in the report");
  app.add_option("--base", base, "Base of Omega and unbound formulas: \"category\" or a monoid name");

  std::string path, from, to, object, notion, mode = "internal", formula, action;
  std::vector<std::string> binds, inputs;
  std::size_t budget = 10000;
  SuiteOptions suite;
  suite.fixtures = TOPOSBENCH_FIXTURE_DIR;
  std::string fixtures_out;

  auto* validate = app.add_subcommand("validate", "Check a model or machine file");
  validate->add_option("file", path)->required();

  auto* monos = app.add_subcommand("monos", "List the monomorphisms between two presheaves");
  monos->add_option("model", path)->required();
  monos->add_option("--from", from)->required();
  monos->add_option("--to", to)->required();

  auto* fin = app.add_subcommand("finiteness", "Decide a finiteness notion for an object");
  fin->add_option("model", path)->required();
  fin->add_option("--object", object)->required();
  fin->add_option("--notion", notion, "dedekind, kuratowski or lp:<p>")->required();
  fin->add_option("--mode", mode)->check(CLI::IsMember({"internal", "external"}));

  auto* holds = app.add_subcommand("holds", "Evaluate a sentence of the internal language");
  holds->add_option("model", path)->required();
  holds->add_option("--formula", formula)->required();
  holds->add_option("--bind", binds, "Ground type binding var=object");

  auto* tm = app.add_subcommand("tm", "Run a machine or compute its closure");
  tm->add_option("action", action)->required()->check(CLI::IsMember({"run", "closure"}));
  tm->add_option("machine", path)->required();
  tm->add_option("--input", inputs);
  tm->add_option("--budget", budget, "Configuration budget");

  auto* suite_cmd = app.add_subcommand("suite", "Run the property suites");
  suite_cmd->add_option("--seed", suite.seed);
  suite_cmd->add_option("--inject", suite.inject)->check(CLI::IsMember({"heyting"}));
  suite_cmd->add_option("--fixtures", suite.fixtures, "Directory of model fixtures");
  suite_cmd->add_option("--random", suite.random_objects, "Number of random presheaves");

  auto* fixtures = app.add_subcommand("fixtures", "Write the fixture corpus");
  fixtures->add_option("--out", fixtures_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  const auto* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (command == "validate") {
      o = cmd_validate(path);
    } else if (command == "monos") {
      o = cmd_monos(path, from, to);
    } else if (command == "finiteness") {
      o = cmd_finiteness(path, object, notion, mode, base);
    } else if (command == "holds") {
      o = cmd_holds(path, formula, binds, base);
    } else if (command == "tm") {
      o = cmd_tm(action, path, inputs, budget);
    } else if (command == "suite") {
      o = cmd_suite(suite);
    } else {
      o.report["written"] = write_fixtures(fixtures_out);
      o.summary = "wrote " + o.report["written"].dump() + " fixture(s)";
    }
  } catch (const Error& e) {
    o.report = json::object();
    o.report["error"] = error_json(e);
    o.code = exit_code_for(e.code());
    o.summary = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  o.report["command"] = command;
  o.report["engine_version"] = kVersion;
  if (timings) {
    o.report["timings_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  out << o.report.dump(2) << "\n";
  err << o.summary << "\n";
  return o.code;
}

}  // namespace toposbench::cli
