#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "umlogic/formula.hpp"
#include "umlogic/space.hpp"

namespace umlogic {

class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidityOptions {
  /// Largest number of valuations that may be enumerated.
  std::uint64_t max_valuations = std::uint64_t{1} << 22;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend
  /// on this value.
  unsigned threads = 1;
};

struct Counterexample {
  Valuation valuation;
  std::size_t world = 0;
};

struct ValidityResult {
  bool valid = true;
  std::uint64_t valuations = 0;
  /// Lexicographically least failing (valuation index, world), where the
  /// valuation index packs atom i (sorted by name) into bits
  /// [i*n, (i+1)*n), one bit per point.
  std::optional<Counterexample> counterexample;
};

/// Truth at every world under every valuation of the formula's atoms.
ValidityResult valid_in_model(const UltrametricSpace& space, const Formula& f, const ValidityOptions& options = {});

// ---- axiom schemas -----------------------------------------------------

enum class Schema { K, T, UM1, TI, UM2, UM3, D, UM4 };

const std::vector<Schema>& all_schemas();
std::string_view schema_name(Schema s);
std::optional<Schema> schema_from_name(std::string_view name);

/// Metavariable assignment. Formula metavariables are "phi" and "psi";
/// grade metavariables are "eps", "gamma" and "delta".
struct Bindings {
  std::map<std::string, Formula> formulas;
  std::map<std::string, Grade> grades;

  friend bool operator==(const Bindings&, const Bindings&) = default;
};

/// `name` is a schema name, or for the biconditionals TI and D one of the
/// single directions "TI-ltr", "TI-rtl", "D-ltr", "D-rtl".
struct AxiomMatch {
  std::string name;
  Bindings bindings;
};

class AxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every schema (and biconditional direction) the formula instantiates.
/// Matching is done on desugared forms, so diamonds and their
/// negated-box expansions are interchangeable; formula bindings are
/// reported desugared.
std::vector<AxiomMatch> match_axiom(const Formula& f);

/// Builds the schema instance. For TI, "eps" is optional and must equal
/// max(gamma, delta) when given. Throws AxiomError on unknown schema,
/// missing metavariables, grades outside [0,1] or violated side conditions.
Formula instantiate_axiom(std::string_view name, const Bindings& bindings);

/// Whether `matches` contains `name` with bindings equal to `bindings` up to
/// desugaring of the formula metavariables.
bool has_match(const std::vector<AxiomMatch>& matches, std::string_view name, const Bindings& bindings);

// ---- proofs ------------------------------------------------------------

struct Justification {
  enum class Kind { Axiom, ModusPonens, Necessitation, Premise };
  Kind kind = Kind::Premise;
  std::string schema;
  std::optional<Bindings> bindings;
  /// MP: minor premise line and implication line. Nec: cited line.
  std::size_t first = 0;
  std::size_t second = 0;
  Grade grade;
};

struct ProofLine {
  std::size_t number;
  Formula formula;
  Justification by;
};

struct Proof {
  std::vector<ProofLine> lines;
};

struct ProofVerdict {
  bool accepted = true;
  std::optional<std::size_t> failing_line;
  std::string reason;
  /// Accepted lines that do not depend on any premise.
  std::vector<std::size_t> theorems;
};

/// Checks each line in order and stops at the first bad one. Line numbers
/// must be strictly increasing (std::invalid_argument otherwise); citations
/// of absent or later lines reject the citing line.
ProofVerdict check_proof(const Proof& proof);

}  // namespace umlogic
