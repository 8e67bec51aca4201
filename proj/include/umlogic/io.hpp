#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "umlogic/constructions.hpp"
#include "umlogic/semantics.hpp"
#include "umlogic/space.hpp"
#include "umlogic/validity.hpp"

namespace umlogic {

using nlohmann::json;

/// Malformed input document: bad JSON shape, unknown names, or a space that
/// fails validation.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the model file format:
///
///   {"points": [...],
///    "distance": {"matrix": [["0","1/8",...], ...]} | {"sequences": {"w0": "111", ...}},
///    "valuation": {"p": ["w0", ...], ...}}
///
/// The space is validated; violations are reported in the exception text.
Model model_from_json(const json& doc);
/// Same, but keeps spaces that fail validation (for validate-model).
Model model_from_json_unchecked(const json& doc);

/// Writes the "matrix" form, or the "sequences" form when sequences are given
/// for every point.
json model_to_json(const Model& model, const std::map<std::string, std::string>* sequences = nullptr);

Valuation valuation_from_json(const json& doc, const UltrametricSpace& space);
json valuation_to_json(const Valuation& v, const UltrametricSpace& space);

/// Proof file: [{"n": 1, "formula": "...", "by": "axiom:T" | "mp:i,j" | "nec:i:grade" | "premise",
///               "bind": {"phi": "p", "eps": "1/2"}}, ...]
Proof proof_from_json(const json& doc);
json proof_to_json(const Proof& proof);
Justification parse_justification(const std::string& by);
std::string justification_to_string(const Justification& j);

/// {"k": "1/1", "map": {"src": "tgt", ...}}
PointMap point_map_from_json(const json& doc, const UltrametricSpace& src, const UltrametricSpace& tgt);

json to_json(const ValidityResult& r, const UltrametricSpace& space);
json to_json(const DegreeReport& r);
json to_json(const ProofVerdict& v);
json to_json(const MorphismVerdict& v, const UltrametricSpace& src, const UltrametricSpace& tgt);
json to_json(const Bindings& b);
Bindings bindings_from_json(const json& doc);
json violations_to_json(const std::vector<Violation>& violations);

/// Point names of a set, sorted lexicographically.
std::vector<std::string> sorted_names(const UltrametricSpace& space, const PointSet& set);

}  // namespace umlogic
