#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "umlogic/constructions.hpp"

namespace umlogic {

struct HarnessConfig {
  std::uint64_t seed = 1;
  /// Random component models per satisfaction round.
  std::size_t models = 10;
  /// Formulas sampled per model or morphism.
  std::size_t formulas = 100;
  /// Axiom instances per schema for the validity properties.
  std::size_t instances = 10;
  std::size_t formula_depth = 3;
  std::size_t max_component_points = 4;
};

struct PropertyResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t discrepancies = 0;
  std::optional<std::string> witness;
};

struct HarnessReport {
  std::vector<PropertyResult> properties;
  std::vector<std::string> notes;

  bool clean() const;
  nlohmann::json to_json() const;
};

/// Seeded empirical check of the preservation results:
///  - union_satisfaction: truth at component worlds is unchanged in the union;
///  - union_validity: validity in each component carries over to the union
///    (three copies of the depth-2 Cantor space);
///  - subspace_validity: validity carries over to every eps-generated
///    subspace of the depth-3 Cantor space;
///  - morphism_transfer: for accepted bounded morphisms, non-modal formulas
///    transfer exactly, <eps>phi transfers to <k*eps>phi, and for k = 1
///    every formula transfers both ways.
HarnessReport preservation_harness(const HarnessConfig& config);

/// Last-bit truncation from Cantor depth n+1 onto depth n (bit naming).
PointMap truncation_map(std::size_t depth);
/// Flips the first bit of every point of cantor_space(depth).
PointMap first_bit_swap(std::size_t depth);
/// Appends a 0 bit: cantor_space(depth) into cantor_space(depth + 1).
PointMap append_zero_map(std::size_t depth);

/// Target valuation pulled back along a map: V(p) = f^-1(V'(p)).
Valuation pullback(const Valuation& target, const PointMap& pm, std::size_t source_size);
/// Source valuation pushed forward along a bijection.
Valuation pushforward(const Valuation& source, const PointMap& pm, std::size_t target_size);

}  // namespace umlogic
