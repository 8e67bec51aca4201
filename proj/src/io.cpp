#include "umlogic/io.hpp"

#include <algorithm>
#include <charconv>

namespace umlogic {

namespace {

const json& require(const json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string(what) + ": missing \"" + key + "\"");
  return doc.at(key);
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw FormatError(what + ": expected a string, got " + j.dump());
  return j.get<std::string>();
}

Grade grade_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Grade{j.get<std::int64_t>()};
  try {
    return Grade::parse(as_string(j, what));
  } catch (const GradeError& e) {
    throw FormatError(what + ": " + e.what());
  }
}

std::size_t parse_index(std::string_view text, const std::string& by) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw FormatError("malformed justification '" + by + "'");
  return value;
}

bool is_formula_meta(const std::string& k) { return k == "phi" || k == "psi"; }
bool is_grade_meta(const std::string& k) { return k == "eps" || k == "gamma" || k == "delta"; }

Model load_model(const json& doc, bool check) {
  if (!doc.is_object()) throw FormatError("model: expected a JSON object");
  const json& pts = require(doc, "points", "model");
  if (!pts.is_array()) throw FormatError("model: \"points\" must be an array");
  std::vector<std::string> names;
  for (const auto& p : pts) names.push_back(as_string(p, "model point"));
  const std::size_t n = names.size();

  const json& dist = require(doc, "distance", "model");
  std::vector<std::vector<Grade>> d(n, std::vector<Grade>(n));
  if (dist.contains("matrix")) {
    const json& m = dist.at("matrix");
    if (!m.is_array() || m.size() != n) throw FormatError("model: matrix must have one row per point");
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i].is_array() || m[i].size() != n) throw FormatError("model: matrix row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < n; ++j) d[i][j] = grade_from_json(m[i][j], "model distance");
    }
  } else if (dist.contains("sequences")) {
    const json& seq = dist.at("sequences");
    if (!seq.is_object()) throw FormatError("model: sequences must be an object");
    std::vector<std::string> s(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!seq.contains(names[i])) throw FormatError("model: no sequence for point '" + names[i] + "'");
      s[i] = as_string(seq.at(names[i]), "model sequence");
      if (s[i].empty() || s[i].find_first_not_of("01") != std::string::npos)
        throw FormatError("model: sequence of '" + names[i] + "' is not a binary string");
    }
    if (seq.size() != n) throw FormatError("model: sequences name points that are not listed");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        try {
          d[i][j] = sequence_distance(s[i], s[j]);
        } catch (const SpaceError& e) {
          throw FormatError(std::string("model: ") + e.what());
        }
      }
    }
  } else {
    throw FormatError("model: \"distance\" needs \"matrix\" or \"sequences\"");
  }

  std::shared_ptr<const UltrametricSpace> space;
  try {
    space = std::make_shared<const UltrametricSpace>(std::move(names), std::move(d));
  } catch (const SpaceError& e) {
    throw FormatError(std::string("model: ") + e.what());
  }
  if (check) {
    auto violations = validate_space(*space, 8);
    if (!violations.empty()) {
      std::string msg = "model: not an ultra-metric space:";
      for (const auto& v : violations) msg += "\n  " + std::string(axiom_name(v.axiom)) + ": " + v.message;
      throw FormatError(msg);
    }
  }
  Valuation v = doc.contains("valuation") ? valuation_from_json(doc.at("valuation"), *space) : Valuation{};
  return Model(std::move(space), std::move(v));
}

}  // namespace

Model model_from_json(const json& doc) { return load_model(doc, true); }
Model model_from_json_unchecked(const json& doc) { return load_model(doc, false); }

std::vector<std::string> sorted_names(const UltrametricSpace& space, const PointSet& set) {
  auto names = point_names(space, set);
  std::sort(names.begin(), names.end());
  return names;
}

Valuation valuation_from_json(const json& doc, const UltrametricSpace& space) {
  if (!doc.is_object()) throw FormatError("valuation: expected an object of atom -> point list");
  Valuation v;
  for (const auto& [atom, pts] : doc.items()) {
    if (!pts.is_array()) throw FormatError("valuation: \"" + atom + "\" must map to an array");
    PointSet set(space.size());
    for (const auto& p : pts) {
      const auto name = as_string(p, "valuation point");
      if (!space.contains(name)) throw FormatError("valuation: atom " + atom + " names unknown point '" + name + "'");
      set.insert(space.index_of(name));
    }
    v.emplace(atom, std::move(set));
  }
  return v;
}

json valuation_to_json(const Valuation& v, const UltrametricSpace& space) {
  json out = json::object();
  for (const auto& [atom, set] : v) out[atom] = point_names(space, set);
  return out;
}

json model_to_json(const Model& model, const std::map<std::string, std::string>* sequences) {
  const auto& s = *model.space;
  json out;
  out["points"] = s.points();
  if (sequences) {
    json seq = json::object();
    for (const auto& p : s.points()) seq[p] = sequences->at(p);
    out["distance"] = {{"sequences", seq}};
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < s.size(); ++j) row.push_back(s.distance(i, j).str());
      rows.push_back(std::move(row));
    }
    out["distance"] = {{"matrix", rows}};
  }
  out["valuation"] = valuation_to_json(model.valuation, s);
  return out;
}

Justification parse_justification(const std::string& by) {
  Justification j;
  if (by == "premise") {
    j.kind = Justification::Kind::Premise;
  } else if (by.starts_with("axiom:")) {
    j.kind = Justification::Kind::Axiom;
    j.schema = by.substr(6);
    if (j.schema.empty()) throw FormatError("malformed justification '" + by + "'");
  } else if (by.starts_with("mp:")) {
    j.kind = Justification::Kind::ModusPonens;
    const std::string_view rest = std::string_view(by).substr(3);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw FormatError("malformed justification '" + by + "'");
    j.first = parse_index(rest.substr(0, comma), by);
    j.second = parse_index(rest.substr(comma + 1), by);
  } else if (by.starts_with("nec:")) {
    j.kind = Justification::Kind::Necessitation;
    const std::string_view rest = std::string_view(by).substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw FormatError("malformed justification '" + by + "'");
    j.first = parse_index(rest.substr(0, colon), by);
    try {
      j.grade = Grade::parse(rest.substr(colon + 1));
    } catch (const GradeError& e) {
      throw FormatError("malformed justification '" + by + "': " + e.what());
    }
  } else {
    throw FormatError("unknown justification '" + by + "'");
  }
  return j;
}

std::string justification_to_string(const Justification& j) {
  switch (j.kind) {
    case Justification::Kind::Premise: return "premise";
    case Justification::Kind::Axiom: return "axiom:" + j.schema;
    case Justification::Kind::ModusPonens: return "mp:" + std::to_string(j.first) + "," + std::to_string(j.second);
    case Justification::Kind::Necessitation: return "nec:" + std::to_string(j.first) + ":" + j.grade.str();
  }
  return {};
}

Bindings bindings_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("bindings: expected an object");
  Bindings b;
  for (const auto& [key, value] : doc.items()) {
    if (is_formula_meta(key)) {
      try {
        b.formulas.emplace(key, parse(as_string(value, "binding " + key)));
      } catch (const ParseError& e) {
        throw FormatError("binding " + key + ": " + e.what());
      }
    } else if (is_grade_meta(key)) {
      b.grades.emplace(key, grade_from_json(value, "binding " + key));
    } else {
      throw FormatError("unknown metavariable '" + key + "'");
    }
  }
  return b;
}

json to_json(const Bindings& b) {
  json out = json::object();
  for (const auto& [k, f] : b.formulas) out[k] = print(f);
  for (const auto& [k, g] : b.grades) out[k] = g.str();
  return out;
}

Proof proof_from_json(const json& doc) {
  if (!doc.is_array()) throw FormatError("proof: expected an array of lines");
  Proof proof;
  for (const auto& entry : doc) {
    const json& n = require(entry, "n", "proof line");
    if (!n.is_number_integer() || n.get<std::int64_t>() <= 0) throw FormatError("proof line: \"n\" must be a positive integer");
    const auto number = n.get<std::size_t>();
    const auto text = as_string(require(entry, "formula", "proof line"), "proof line formula");
    Formula f = [&] {
      try {
        return parse(text);
      } catch (const ParseError& e) {
        throw FormatError("proof line " + std::to_string(number) + ": " + e.what());
      }
    }();
    Justification by = parse_justification(as_string(require(entry, "by", "proof line"), "proof line \"by\""));
    if (entry.contains("bind")) by.bindings = bindings_from_json(entry.at("bind"));
    if (!proof.lines.empty() && number <= proof.lines.back().number)
      throw FormatError("proof: line numbers must be strictly increasing at " + std::to_string(number));
    proof.lines.push_back({number, std::move(f), std::move(by)});
  }
  return proof;
}

json proof_to_json(const Proof& proof) {
  json out = json::array();
  for (const auto& line : proof.lines) {
    json entry = {{"n", line.number}, {"formula", print(line.formula)}, {"by", justification_to_string(line.by)}};
    if (line.by.bindings) entry["bind"] = to_json(*line.by.bindings);
    out.push_back(std::move(entry));
  }
  return out;
}

PointMap point_map_from_json(const json& doc, const UltrametricSpace& src, const UltrametricSpace& tgt) {
  PointMap pm;
  pm.k = doc.contains("k") ? grade_from_json(doc.at("k"), "point map k") : Grade::one();
  if (pm.k.is_zero()) throw FormatError("point map: k must be positive");
  const json& m = require(doc, "map", "point map");
  if (!m.is_object()) throw FormatError("point map: \"map\" must be an object");
  pm.image.assign(src.size(), tgt.size());
  for (const auto& [from, to] : m.items()) {
    if (!src.contains(from)) throw FormatError("point map: unknown source point '" + from + "'");
    const auto target = as_string(to, "point map image");
    if (!tgt.contains(target)) throw FormatError("point map: unknown target point '" + target + "'");
    pm.image[src.index_of(from)] = tgt.index_of(target);
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (pm.image[i] == tgt.size()) throw FormatError("point map: not total, '" + src.point(i) + "' is unmapped");
  }
  return pm;
}

json to_json(const ValidityResult& r, const UltrametricSpace& space) {
  json out = {{"valid", r.valid}, {"valuations", r.valuations}};
  if (r.counterexample) {
    out["counterexample"] = {{"world", space.point(r.counterexample->world)},
                             {"valuation", valuation_to_json(r.counterexample->valuation, space)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json to_json(const DegreeReport& r) {
  json out = {{"kind", r.kind == DegreeKind::Stability ? "stability" : "plausibility"},
              {"attained", r.attained},
              {"threshold", r.threshold ? json(r.threshold->str()) : json(nullptr)}};
  if (r.kind == DegreeKind::Plausibility) out["level"] = r.level ? json(r.level->str()) : json(nullptr);
  return out;
}

json to_json(const ProofVerdict& v) {
  return {{"accepted", v.accepted},
          {"failing_line", v.failing_line ? json(*v.failing_line) : json(nullptr)},
          {"reason", v.reason},
          {"theorems", v.theorems}};
}

json to_json(const MorphismVerdict& v, const UltrametricSpace& src, const UltrametricSpace& tgt) {
  json out = {{"accepted", v.accepted()}, {"atoms", v.atoms_ok}, {"forward", v.forward_ok}, {"back", v.back_ok}};
  json ws = json::array();
  for (const auto& w : v.witnesses) {
    json j = {{"condition", w.condition}, {"message", w.message}};
    json s = json::array();
    for (auto i : w.source_points) s.push_back(src.point(i));
    json t = json::array();
    for (auto i : w.target_points) t.push_back(tgt.point(i));
    j["source"] = s;
    j["target"] = t;
    if (w.atom) j["atom"] = *w.atom;
    if (w.grade) j["grade"] = w.grade->str();
    ws.push_back(std::move(j));
  }
  out["witnesses"] = ws;
  return out;
}

json violations_to_json(const std::vector<Violation>& violations) {
  json out = json::array();
  for (const auto& v : violations) out.push_back({{"axiom", axiom_name(v.axiom)}, {"message", v.message}});
  return out;
}

}  // namespace umlogic
