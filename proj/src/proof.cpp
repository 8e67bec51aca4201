#include <map>

#include "umlogic/validity.hpp"

namespace umlogic {

namespace {

bool same_up_to_sugar(const Formula& a, const Formula& b) { return a == b || desugar(a) == desugar(b); }

std::string quoted(const Formula& f) { return "'" + print(f) + "'"; }

}  // namespace

ProofVerdict check_proof(const Proof& proof) {
  ProofVerdict verdict;
  std::map<std::size_t, std::size_t> position;  // line number -> index
  std::vector<bool> uses_premise;

  auto reject = [&](const ProofLine& line, std::string reason) {
    verdict.accepted = false;
    verdict.failing_line = line.number;
    verdict.reason = "line " + std::to_string(line.number) + ": " + std::move(reason);
    verdict.theorems.clear();
    return verdict;
  };

  std::size_t previous = 0;
  for (std::size_t idx = 0; idx < proof.lines.size(); ++idx) {
    const ProofLine& line = proof.lines[idx];
    if (line.number == 0 || (idx > 0 && line.number <= previous))
      throw std::invalid_argument("proof line numbers must be positive and strictly increasing (line " +
                                  std::to_string(line.number) + ")");
    previous = line.number;

    auto cited = [&](std::size_t n) -> const ProofLine* {
      auto it = position.find(n);
      return it == position.end() ? nullptr : &proof.lines[it->second];
    };

    bool premise = false;
    const Justification& by = line.by;
    switch (by.kind) {
      case Justification::Kind::Premise:
        premise = true;
        break;

      case Justification::Kind::Axiom: {
        const auto matches = match_axiom(line.formula);
        bool ok = false;
        for (const auto& m : matches) {
          const bool name_ok = m.name == by.schema || m.name.substr(0, m.name.find('-')) == by.schema;
          if (!name_ok) continue;
          if (by.bindings && !has_match({m}, m.name, *by.bindings)) continue;
          ok = true;
          break;
        }
        if (!ok) {
          if (!schema_from_name(by.schema) && by.schema.find('-') == std::string::npos)
            return reject(line, "unknown axiom schema '" + by.schema + "'");
          return reject(line, quoted(line.formula) + " is not an instance of " + by.schema +
                                  (by.bindings ? " with the given bindings" : ""));
        }
        break;
      }

      case Justification::Kind::ModusPonens: {
        const ProofLine* minor = cited(by.first);
        const ProofLine* major = cited(by.second);
        if (!minor || !major)
          return reject(line, "MP cites line " + std::to_string(!minor ? by.first : by.second) +
                                  ", which is not an earlier line");
        const Formula expected = Formula::implication(minor->formula, line.formula);
        if (!same_up_to_sugar(major->formula, expected))
          return reject(line, "MP: line " + std::to_string(major->number) + " " + quoted(major->formula) +
                                  " is not " + quoted(expected));
        premise = uses_premise[position.at(by.first)] || uses_premise[position.at(by.second)];
        break;
      }

      case Justification::Kind::Necessitation: {
        const ProofLine* src = cited(by.first);
        if (!src) return reject(line, "Nec cites line " + std::to_string(by.first) + ", which is not an earlier line");
        if (!by.grade.in_unit_interval()) return reject(line, "Nec grade " + by.grade.str() + " outside [0,1]");
        const Formula expected = Formula::box(by.grade, src->formula);
        if (!same_up_to_sugar(line.formula, expected))
          return reject(line, "Nec: expected " + quoted(expected) + ", found " + quoted(line.formula));
        premise = uses_premise[position.at(by.first)];
        break;
      }
    }

    position.emplace(line.number, idx);
    uses_premise.push_back(premise);
    if (!premise) verdict.theorems.push_back(line.number);
  }
  return verdict;
}

}  // namespace umlogic
