#include "umlogic/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "umlogic/constructions.hpp"
#include "umlogic/dendrogram.hpp"
#include "umlogic/harness.hpp"
#include "umlogic/io.hpp"
#include "umlogic/semantics.hpp"
#include "umlogic/validity.hpp"

namespace umlogic::cli {

namespace {

struct Options {
  std::vector<std::string> models;
  std::string formula;
  std::string world;
  std::string grade;
  std::size_t depth = 0;
  std::uint64_t seed = 1;
  std::uint64_t cap = std::uint64_t{1} << 22;
  std::string out;
  std::string valuation;
  std::string names = "worlds";
  std::string map;
  std::string proof;
  std::string schema;
  std::vector<std::string> binds;
  bool frame = false;
  bool bilipschitz = false;
  std::size_t formulas = 100;
  std::size_t harness_models = 10;
  std::size_t instances = 10;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Model load_model(const std::string& path) {
  try {
    return model_from_json(read_json_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

const std::string& single_model(const Options& o) {
  if (o.models.size() != 1) throw FormatError("expected exactly one --model");
  return o.models.front();
}

Grade parse_grade_flag(const std::string& text) {
  if (text.empty()) throw FormatError("missing --grade");
  try {
    return Grade::parse(text);
  } catch (const GradeError& e) {
    throw FormatError(std::string("--grade: ") + e.what());
  }
}

std::size_t world_index(const Model& m, const std::string& world) {
  if (world.empty()) throw FormatError("missing --world");
  if (!m.space->contains(world)) throw FormatError("unknown world '" + world + "'");
  return m.space->index_of(world);
}

Formula formula_flag(const Options& o) {
  if (o.formula.empty()) throw FormatError("missing --formula");
  return parse(o.formula);
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : path_(o.out), out_(out) {}
  void json_doc(const json& doc) { text(doc.dump(2) + "\n"); }
  void text(const std::string& s) {
    if (path_.empty()) {
      out_ << s;
      return;
    }
    std::ofstream f(path_);
    if (!f) throw FormatError("cannot write '" + path_ + "'");
    f << s;
  }

 private:
  std::string path_;
  std::ostream& out_;
};

int cmd_check(const Options& o, Emitter& e) {
  const Model m = load_model(single_model(o));
  const Formula f = formula_flag(o);
  const bool result = holds(m, world_index(m, o.world), f);
  e.json_doc({{"holds", result}});
  return result ? Affirmative : Negative;
}

int cmd_truthset(const Options& o, Emitter& e) {
  const Model m = load_model(single_model(o));
  const auto ts = truthset(m, formula_flag(o));
  e.json_doc(sorted_names(*m.space, ts.points));
  return Affirmative;
}

int cmd_degree(const Options& o, Emitter& e, DegreeKind kind) {
  const Model m = load_model(single_model(o));
  const Formula f = formula_flag(o);
  const std::size_t w = world_index(m, o.world);
  const DegreeReport r = kind == DegreeKind::Stability ? stability_degree(m, w, f) : plausibility_degree(m, w, f);
  e.json_doc(to_json(r));
  return r.threshold ? Affirmative : Negative;
}

int cmd_cantor(const Options& o, Emitter& e) {
  if (o.depth == 0) throw FormatError("--depth must be at least 1");
  if (o.names != "worlds" && o.names != "bits") throw FormatError("--names must be 'worlds' or 'bits'");
  const auto naming = o.names == "bits" ? CantorNaming::Bits : CantorNaming::Worlds;
  auto space = std::make_shared<const UltrametricSpace>(cantor_space(o.depth, naming));
  Valuation v;
  if (!o.valuation.empty()) {
    try {
      v = valuation_from_json(read_json_file(o.valuation), *space);
    } catch (const FormatError& err) {
      throw FormatError(o.valuation + ": " + err.what());
    }
  }
  std::map<std::string, std::string> seqs;
  for (std::size_t i = 0; i < space->size(); ++i) seqs[space->point(i)] = cantor_sequence(o.depth, i);
  e.json_doc(model_to_json(Model(space, std::move(v)), &seqs));
  return Affirmative;
}

int cmd_valid(const Options& o, Emitter& e) {
  const Model m = load_model(single_model(o));
  ValidityOptions opts;
  opts.max_valuations = o.cap;
  opts.threads = 0;
  const auto r = valid_in_model(*m.space, formula_flag(o), opts);
  e.json_doc(to_json(r, *m.space));
  return r.valid ? Affirmative : Negative;
}

int cmd_axiom(const Options& o, Emitter& e) {
  if (!o.schema.empty()) {
    json binds = json::object();
    for (const auto& b : o.binds) {
      const auto eq = b.find('=');
      if (eq == std::string::npos) throw FormatError("--bind expects name=value, got '" + b + "'");
      binds[b.substr(0, eq)] = b.substr(eq + 1);
    }
    const Formula f = instantiate_axiom(o.schema, bindings_from_json(binds));
    e.json_doc({{"formula", print(f)}});
    return Affirmative;
  }
  const auto matches = match_axiom(formula_flag(o));
  json list = json::array();
  for (const auto& m : matches) list.push_back({{"schema", m.name}, {"bindings", to_json(m.bindings)}});
  e.json_doc({{"matches", list}});
  return matches.empty() ? Negative : Affirmative;
}

int cmd_prove(const Options& o, Emitter& e) {
  if (o.proof.empty()) throw FormatError("missing proof file");
  Proof proof;
  try {
    proof = proof_from_json(read_json_file(o.proof));
  } catch (const FormatError& err) {
    throw FormatError(o.proof + ": " + err.what());
  }
  const auto v = check_proof(proof);
  e.json_doc(to_json(v));
  return v.accepted ? Affirmative : Negative;
}

int cmd_union(const Options& o, Emitter& e) {
  if (o.models.empty()) throw FormatError("union needs at least one --model");
  std::vector<Model> parts;
  for (const auto& p : o.models) parts.push_back(load_model(p));
  e.json_doc(model_to_json(disjoint_union(parts)));
  return Affirmative;
}

int cmd_subspace(const Options& o, Emitter& e) {
  const Model m = load_model(single_model(o));
  const Grade g = parse_grade_flag(o.grade);
  e.json_doc(model_to_json(epsilon_subspace(m, world_index(m, o.world), g)));
  return Affirmative;
}

int cmd_morphism(const Options& o, Emitter& e) {
  if (o.models.size() != 2) throw FormatError("morphism needs --model SOURCE --model TARGET");
  if (o.map.empty()) throw FormatError("missing --map");
  const Model src = load_model(o.models[0]);
  const Model tgt = load_model(o.models[1]);
  PointMap pm;
  try {
    pm = point_map_from_json(read_json_file(o.map), *src.space, *tgt.space);
  } catch (const FormatError& err) {
    throw FormatError(o.map + ": " + err.what());
  }
  const MorphismVerdict v =
      o.frame ? check_frame_morphism(*src.space, *tgt.space, pm) : check_bounded_morphism(src, tgt, pm);
  json doc = to_json(v, *src.space, *tgt.space);
  doc["k"] = pm.k.str();
  if (o.bilipschitz) {
    const auto b = bilipschitz_bounds(*src.space, *tgt.space, pm);
    doc["bilipschitz"] = {{"tightest_k", b.tightest_k.str()}, {"holds_for_k", b.holds_for_k}};
  }
  e.json_doc(doc);
  return v.accepted() ? Affirmative : Negative;
}

int cmd_harness(const Options& o, Emitter& e) {
  HarnessConfig cfg;
  cfg.seed = o.seed;
  cfg.formulas = o.formulas;
  cfg.models = o.harness_models;
  cfg.instances = o.instances;
  const auto report = preservation_harness(cfg);
  e.json_doc(report.to_json());
  return report.clean() ? Affirmative : Negative;
}

int cmd_dot(const Options& o, Emitter& e) {
  const Model m = load_model(single_model(o));
  e.text(dendrogram_dot(*m.space));
  return Affirmative;
}

int cmd_validate(const Options& o, Emitter& e) {
  const std::string& path = single_model(o);
  Model m;
  try {
    m = model_from_json_unchecked(read_json_file(path));
  } catch (const FormatError& err) {
    throw FormatError(path + ": " + err.what());
  }
  const auto violations = validate_space(*m.space);
  e.json_doc({{"valid", violations.empty()}, {"violations", violations_to_json(violations)}});
  return violations.empty() ? Affirmative : Negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Model and proof checker for graded stability logic over finite ultra-metric spaces", "umlogic"};
  app.require_subcommand(1);

  auto model_opt = [&](CLI::App* sub, bool many = false) {
    auto* opt = sub->add_option("--model", o.models, many ? "Model files" : "Model file")->check(CLI::ExistingFile);
    if (!many) opt->expected(1);
  };
  auto formula_opt = [&](CLI::App* sub) { sub->add_option("--formula", o.formula, "Formula text"); };
  auto world_opt = [&](CLI::App* sub) { sub->add_option("--world", o.world, "World (point name)"); };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Write the result to this file"); };

  std::vector<std::pair<CLI::App*, std::function<int(Emitter&)>>> commands;
  auto add = [&](const std::string& name, const std::string& help, std::function<int(Emitter&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  auto* check = add("check", "Does a formula hold at a world", [&](Emitter& e) { return cmd_check(o, e); });
  model_opt(check), formula_opt(check), world_opt(check), out_opt(check);

  auto* ts = add("truthset", "Worlds where a formula holds", [&](Emitter& e) { return cmd_truthset(o, e); });
  model_opt(ts), formula_opt(ts), out_opt(ts);

  auto* stab = add("stability", "Degree of stability at a world",
                   [&](Emitter& e) { return cmd_degree(o, e, DegreeKind::Stability); });
  model_opt(stab), formula_opt(stab), world_opt(stab), out_opt(stab);

  auto* plaus = add("plausibility", "Degree of plausibility at a world",
                    [&](Emitter& e) { return cmd_degree(o, e, DegreeKind::Plausibility); });
  model_opt(plaus), formula_opt(plaus), world_opt(plaus), out_opt(plaus);

  auto* cantor = add("cantor", "Emit the depth-n Cantor-tree model", [&](Emitter& e) { return cmd_cantor(o, e); });
  cantor->add_option("--depth", o.depth, "Sequence length")->required();
  cantor->add_option("--valuation", o.valuation, "Valuation file (atom -> point list)")->check(CLI::ExistingFile);
  cantor->add_option("--names", o.names, "Point names: worlds (w0..) or bits (111..)");
  out_opt(cantor);

  auto* valid = add("valid", "Validity in the model's space", [&](Emitter& e) { return cmd_valid(o, e); });
  model_opt(valid), formula_opt(valid), out_opt(valid);
  valid->add_option("--cap", o.cap, "Maximum number of valuations to enumerate");

  auto* axiom = add("axiom", "Match a formula against the axiom schemas, or instantiate one",
                    [&](Emitter& e) { return cmd_axiom(o, e); });
  formula_opt(axiom), out_opt(axiom);
  axiom->add_option("--name", o.schema, "Schema to instantiate (K, T, UM1, TI, UM2, UM3, D, UM4)");
  axiom->add_option("--bind", o.binds, "Metavariable binding, e.g. phi=p or eps=1/2");

  auto* prove = add("prove", "Check a Hilbert-style proof file", [&](Emitter& e) { return cmd_prove(o, e); });
  prove->add_option("proof", o.proof, "Proof file")->required()->check(CLI::ExistingFile);
  out_opt(prove);

  auto* uni = add("union", "Disjoint union of models", [&](Emitter& e) { return cmd_union(o, e); });
  model_opt(uni, true), out_opt(uni);

  for (const char* name : {"ball", "subspace"}) {
    auto* sub = add(name, "Epsilon-generated subspace around a world", [&](Emitter& e) { return cmd_subspace(o, e); });
    model_opt(sub), world_opt(sub), out_opt(sub);
    sub->add_option("--grade", o.grade, "Radius");
  }

  auto* morph = add("morphism", "Check a bounded morphism between two models",
                    [&](Emitter& e) { return cmd_morphism(o, e); });
  model_opt(morph, true), out_opt(morph);
  morph->add_option("--map", o.map, "Point map file")->check(CLI::ExistingFile);
  morph->add_flag("--frame", o.frame, "Ignore valuations (frame morphism)");
  morph->add_flag("--bilipschitz", o.bilipschitz, "Also report bi-Lipschitz bounds (bijections only)");

  auto* harness = add("harness", "Seeded preservation checks", [&](Emitter& e) { return cmd_harness(o, e); });
  harness->add_option("--seed", o.seed, "Random seed");
  harness->add_option("--formulas", o.formulas, "Formulas per model");
  harness->add_option("--models", o.harness_models, "Random component pairs");
  harness->add_option("--instances", o.instances, "Axiom instances per schema");
  out_opt(harness);

  auto* dot = add("dot", "Ball hierarchy as Graphviz", [&](Emitter& e) { return cmd_dot(o, e); });
  model_opt(dot), out_opt(dot);

  auto* vm = add("validate-model", "Report ultra-metric violations", [&](Emitter& e) { return cmd_validate(o, e); });
  model_opt(vm), out_opt(vm);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Affirmative;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return Affirmative;
  } catch (const CLI::ParseError& e) {
    err << "umlogic: " << e.what() << "\n";
    return Error;
  }

  try {
    for (auto& [sub, fn] : commands) {
      if (sub->parsed()) {
        Emitter emitter(o, out);
        return fn(emitter);
      }
    }
  } catch (const ParseError& e) {
    err << "umlogic: formula: " << e.what() << "\n";
    return Error;
  } catch (const std::exception& e) {
    err << "umlogic: " << e.what() << "\n";
    return Error;
  }
  return Error;
}

}  // namespace umlogic::cli
