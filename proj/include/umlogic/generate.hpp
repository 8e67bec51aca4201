#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "umlogic/formula.hpp"
#include "umlogic/space.hpp"
#include "umlogic/validity.hpp"

namespace umlogic {

/// All randomness in the library flows through this engine so that one
/// 64-bit seed reproduces a run.
using Rng = std::mt19937_64;

struct FormulaShape {
  std::vector<std::string> atoms{"p", "q"};
  std::vector<Grade> grades{Grade::zero(), Grade{1, 2}, Grade::one()};
  std::size_t max_depth = 3;
  /// Include Or/Implies/Diamond in addition to the core connectives.
  bool sugar = true;
  bool modal = true;
};

Formula random_formula(Rng& rng, const FormulaShape& shape);

/// Every formula over Atom/Not/And/Box with the given atoms and grades and
/// connective depth <= max_depth, without duplicates.
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atom_names, const std::vector<Grade>& grades,
                                        std::size_t max_depth);

/// Random ultra-metric on n points built by agglomerative merging at
/// non-decreasing heights drawn from k/16, k = 1..16. Points are named
/// x0, x1, ...
UltrametricSpace random_ultrametric_space(Rng& rng, std::size_t n);

Valuation random_valuation(Rng& rng, std::size_t points, const std::vector<std::string>& atom_names);

PointSet random_subset(Rng& rng, std::size_t points);

/// Random bindings for a schema: phi and psi from `shape`, grades from
/// shape.grades with the schema's side conditions satisfied.
Bindings random_bindings(Rng& rng, Schema schema, const FormulaShape& shape);

}  // namespace umlogic
