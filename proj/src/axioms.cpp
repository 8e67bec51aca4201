#include <algorithm>

#include "umlogic/validity.hpp"

namespace umlogic {

namespace {

// Schema templates are written once against a builder; FormulaBuilder
// produces concrete instances, PatternBuilder produces desugared match
// patterns.

struct FormulaBuilder {
  using Node = Formula;
  const Bindings& b;

  Node meta(const std::string& name) const {
    auto it = b.formulas.find(name);
    if (it == b.formulas.end()) throw AxiomError("missing formula metavariable '" + name + "'");
    return it->second;
  }
  Grade grade(const std::string& name) const {
    auto it = b.grades.find(name);
    if (it == b.grades.end()) throw AxiomError("missing grade metavariable '" + name + "'");
    if (!it->second.in_unit_interval()) throw AxiomError("grade " + name + " = " + it->second.str() + " outside [0,1]");
    return it->second;
  }
  Node box(const std::string& g, Node a) const { return Formula::box(grade(g), std::move(a)); }
  Node diamond(const std::string& g, Node a) const { return Formula::diamond(grade(g), std::move(a)); }
  Node neg(Node a) const { return Formula::negation(std::move(a)); }
  Node implies(Node a, Node c) const { return Formula::implication(std::move(a), std::move(c)); }
  Node iff(Node a, Node c) const { return Formula::biconditional(std::move(a), std::move(c)); }
};

struct Pattern {
  enum class Kind { Meta, Not, And, Box } kind;
  std::string name;  // metavariable, or grade metavariable for Box
  std::vector<Pattern> kids;
};

struct PatternBuilder {
  using Node = Pattern;
  Node meta(const std::string& name) const { return {Pattern::Kind::Meta, name, {}}; }
  Node box(const std::string& g, Node a) const { return {Pattern::Kind::Box, g, {std::move(a)}}; }
  Node neg(Node a) const { return {Pattern::Kind::Not, {}, {std::move(a)}}; }
  Node conj(Node a, Node c) const { return {Pattern::Kind::And, {}, {std::move(a), std::move(c)}}; }
  Node diamond(const std::string& g, Node a) const { return neg(box(g, neg(std::move(a)))); }
  Node implies(Node a, Node c) const { return neg(conj(std::move(a), neg(std::move(c)))); }
  Node iff(Node a, Node c) const { return conj(implies(a, c), implies(c, a)); }
};

template <class B>
typename B::Node build(std::string_view name, const B& b) {
  auto phi = [&] { return b.meta("phi"); };
  if (name == "K")
    return b.implies(b.box("eps", b.implies(phi(), b.meta("psi"))),
                     b.implies(b.box("eps", phi()), b.box("eps", b.meta("psi"))));
  if (name == "T") return b.implies(b.box("eps", phi()), phi());
  if (name == "UM1") return b.implies(b.box("eps", phi()), b.diamond("eps", phi()));
  if (name == "TI") return b.iff(b.box("gamma", b.box("delta", phi())), b.box("eps", phi()));
  if (name == "TI-ltr") return b.implies(b.box("gamma", b.box("delta", phi())), b.box("eps", phi()));
  if (name == "TI-rtl") return b.implies(b.box("eps", phi()), b.box("gamma", b.box("delta", phi())));
  if (name == "UM2") return b.implies(b.diamond("eps", phi()), b.box("eps", b.diamond("eps", phi())));
  if (name == "UM3") return b.implies(b.box("gamma", phi()), b.box("delta", phi()));
  if (name == "D") return b.iff(b.diamond("eps", phi()), b.neg(b.box("eps", b.neg(phi()))));
  if (name == "D-ltr") return b.implies(b.diamond("eps", phi()), b.neg(b.box("eps", b.neg(phi()))));
  if (name == "D-rtl") return b.implies(b.neg(b.box("eps", b.neg(phi()))), b.diamond("eps", phi()));
  if (name == "UM4") return b.implies(phi(), b.box("eps", b.diamond("eps", phi())));
  throw AxiomError("unknown axiom schema '" + std::string(name) + "'");
}

const std::vector<std::string_view>& matchable_names() {
  static const std::vector<std::string_view> names{"K",   "T",      "UM1", "TI",    "TI-ltr", "TI-rtl",
                                                   "UM2", "UM3",    "D",   "D-ltr", "D-rtl",  "UM4"};
  return names;
}

std::string_view base_name(std::string_view name) { return name.substr(0, name.find('-')); }

bool match(const Pattern& p, const Formula& f, Bindings& b) {
  switch (p.kind) {
    case Pattern::Kind::Meta: {
      auto [it, inserted] = b.formulas.emplace(p.name, f);
      return inserted || it->second == f;
    }
    case Pattern::Kind::Not:
      return f.kind() == Connective::Not && match(p.kids[0], f.operand(), b);
    case Pattern::Kind::And:
      return f.kind() == Connective::And && match(p.kids[0], f.lhs(), b) && match(p.kids[1], f.rhs(), b);
    case Pattern::Kind::Box: {
      if (f.kind() != Connective::Box) return false;
      auto [it, inserted] = b.grades.emplace(p.name, f.grade());
      if (!inserted && it->second != f.grade()) return false;
      return match(p.kids[0], f.operand(), b);
    }
  }
  return false;
}

// Side conditions; also drops TI's derived outer grade from the report.
bool side_conditions_hold(std::string_view name, Bindings& b) {
  auto base = base_name(name);
  if (base == "TI") {
    const Grade& outer = b.grades.at("eps");
    if (outer != max(b.grades.at("gamma"), b.grades.at("delta"))) return false;
    b.grades.erase("eps");
  }
  if (base == "UM3" && b.grades.at("gamma") < b.grades.at("delta")) return false;
  return true;
}

Bindings desugared(const Bindings& b) {
  Bindings out = b;
  for (auto& [k, v] : out.formulas) v = desugar(v);
  return out;
}

}  // namespace

const std::vector<Schema>& all_schemas() {
  static const std::vector<Schema> all{Schema::K,   Schema::T,   Schema::UM1, Schema::TI,
                                       Schema::UM2, Schema::UM3, Schema::D,   Schema::UM4};
  return all;
}

std::string_view schema_name(Schema s) {
  switch (s) {
    case Schema::K: return "K";
    case Schema::T: return "T";
    case Schema::UM1: return "UM1";
    case Schema::TI: return "TI";
    case Schema::UM2: return "UM2";
    case Schema::UM3: return "UM3";
    case Schema::D: return "D";
    case Schema::UM4: return "UM4";
  }
  return "?";
}

std::optional<Schema> schema_from_name(std::string_view name) {
  for (auto s : all_schemas()) {
    if (schema_name(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<AxiomMatch> match_axiom(const Formula& f) {
  static const auto patterns = [] {
    std::vector<std::pair<std::string_view, Pattern>> out;
    PatternBuilder pb;
    for (auto name : matchable_names()) out.emplace_back(name, build(name, pb));
    return out;
  }();

  const Formula core = desugar(f);
  std::vector<AxiomMatch> found;
  for (const auto& [name, pattern] : patterns) {
    Bindings b;
    if (match(pattern, core, b) && side_conditions_hold(name, b)) found.push_back({std::string(name), std::move(b)});
  }
  return found;
}

Formula instantiate_axiom(std::string_view name, const Bindings& bindings) {
  if (std::find(matchable_names().begin(), matchable_names().end(), name) == matchable_names().end())
    throw AxiomError("unknown axiom schema '" + std::string(name) + "'");
  Bindings b = bindings;
  auto base = base_name(name);
  if (base == "TI") {
    FormulaBuilder probe{b};
    const Grade outer = max(probe.grade("gamma"), probe.grade("delta"));
    auto it = b.grades.find("eps");
    if (it != b.grades.end() && it->second != outer)
      throw AxiomError("TI requires the outer grade to be max(gamma, delta) = " + outer.str() + ", got " +
                       it->second.str());
    b.grades["eps"] = outer;
  }
  if (base == "UM3") {
    FormulaBuilder probe{b};
    if (probe.grade("gamma") < probe.grade("delta"))
      throw AxiomError("UM3 requires gamma >= delta, got gamma = " + b.grades.at("gamma").str() +
                       ", delta = " + b.grades.at("delta").str());
  }
  return build(name, FormulaBuilder{b});
}

bool has_match(const std::vector<AxiomMatch>& matches, std::string_view name, const Bindings& bindings) {
  const Bindings want = desugared(bindings);
  return std::any_of(matches.begin(), matches.end(), [&](const AxiomMatch& m) {
    if (m.name != name) return false;
    // Matched bindings are desugared already; metavariables the caller left
    // out are not compared.
    for (const auto& [k, v] : want.formulas) {
      auto it = m.bindings.formulas.find(k);
      if (it == m.bindings.formulas.end() || it->second != v) return false;
    }
    for (const auto& [k, v] : want.grades) {
      if (base_name(name) == "TI" && k == "eps") continue;
      auto it = m.bindings.grades.find(k);
      if (it == m.bindings.grades.end() || it->second != v) return false;
    }
    return true;
  });
}

}  // namespace umlogic
