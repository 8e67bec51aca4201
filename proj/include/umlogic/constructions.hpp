#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "umlogic/space.hpp"

namespace umlogic {

/// Disjoint union. Point i of component c is named "c:name"; points of
/// different components are at the sentinel distance 2.
Model disjoint_union(const std::vector<Model>& models);

/// Closed ball B_eps(x) with restricted distances and valuation.
Model epsilon_subspace(const Model& model, std::size_t x, const Grade& eps);

class MorphismError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Total map from source to target points together with the scaling
/// constant k > 0.
struct PointMap {
  std::vector<std::size_t> image;
  Grade k = Grade::one();
};

/// Checks totality and range against the two spaces; throws MorphismError.
void require_total(const UltrametricSpace& src, const UltrametricSpace& tgt, const PointMap& pm);

struct MorphismWitness {
  std::string condition;  // "atoms", "forward" or "back"
  std::vector<std::size_t> source_points;
  std::vector<std::size_t> target_points;
  std::optional<std::string> atom;
  std::optional<Grade> grade;
  std::string message;
};

struct MorphismVerdict {
  bool atoms_ok = true;
  bool forward_ok = true;
  bool back_ok = true;
  std::vector<MorphismWitness> witnesses;  // first failure per condition

  bool accepted() const { return atoms_ok && forward_ok && back_ok; }
};

/// Atom agreement, forward (d'(f w, f v) <= k d(w,v) whenever d(w,v) <= 1)
/// and back (for d'(f w, v') <= 1 some preimage v of v' has
/// d(w,v) <= d'(f w, v') / k). Grades above 1 are not quantified over.
MorphismVerdict check_bounded_morphism(const Model& src, const Model& tgt, const PointMap& pm);
MorphismVerdict check_frame_morphism(const UltrametricSpace& src, const UltrametricSpace& tgt, const PointMap& pm);

struct BilipschitzReport {
  /// Smallest k >= 1 with d/k <= d' <= k d on all pairs.
  Grade tightest_k;
  /// Whether the map's own k satisfies both bounds.
  bool holds_for_k = false;
  bool frame_morphism = false;
};

/// Requires a bijection (MorphismError otherwise).
BilipschitzReport bilipschitz_bounds(const UltrametricSpace& src, const UltrametricSpace& tgt, const PointMap& pm);

}  // namespace umlogic
