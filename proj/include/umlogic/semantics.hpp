#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umlogic/formula.hpp"
#include "umlogic/space.hpp"

namespace umlogic {

/// Precomputed neighbourhood structure of one space.
///
/// Balls only change at realized distances, so every grade is reduced to the
/// rank of the largest realized distance not exceeding it and balls are
/// cached per rank. The cache is filled lazily: an instance must not be
/// shared between threads. The space must outlive the index.
class BallIndex {
 public:
  explicit BallIndex(const UltrametricSpace& space);

  const UltrametricSpace& space() const { return *space_; }
  std::size_t size() const { return space_->size(); }
  const std::vector<Grade>& radii() const { return radii_; }

  /// Index into radii() of the largest realized distance <= eps.
  std::size_t rank_of(const Grade& eps) const;

  const PointSet& ball(std::size_t x, std::size_t rank) const;
  const PointSet& ball(std::size_t x, const Grade& eps) const { return ball(x, rank_of(eps)); }

  /// {x : ball(x, eps) is inside a}
  void interior_into(PointSet& out, const PointSet& a, std::size_t rank) const;
  /// {x : ball(x, eps) meets a}
  void closure_into(PointSet& out, const PointSet& a, std::size_t rank) const;

  PointSet interior(const PointSet& a, const Grade& eps) const;
  PointSet closure(const PointSet& a, const Grade& eps) const;

 private:
  const UltrametricSpace* space_;
  std::vector<Grade> radii_;
  std::vector<std::uint32_t> rank_;  // n*n, rank of d(x,y) in radii_
  mutable std::vector<std::vector<PointSet>> balls_;  // per rank, lazily
};

/// Evaluates one formula bottom-up over its desugared subformulas, keeping a
/// truth set per subformula. Reusable across valuations of the same space,
/// which is what validity checking relies on.
class Evaluator {
 public:
  Evaluator(const BallIndex& index, const Formula& formula);

  /// Atoms of the formula in sorted order; the order used by the span
  /// overload of evaluate().
  const std::vector<std::string>& atoms() const { return atoms_; }

  const PointSet& evaluate(const Valuation& valuation);
  const PointSet& evaluate(std::span<const PointSet> atom_sets);

  /// Truth set of the i-th atom slot, for callers filling them in place.
  PointSet& atom_slot(std::size_t i) { return slots_[atom_slots_[i]]; }
  /// Evaluates with the atom slots as currently filled.
  const PointSet& run();

 private:
  enum class Op { Atom, Not, And, Box };
  struct Step {
    Op op;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t rank = 0;
  };

  const BallIndex* index_;
  std::vector<std::string> atoms_;
  std::vector<std::size_t> atom_slots_;
  std::vector<Step> steps_;
  std::vector<PointSet> slots_;
};

PointSet interior_eps(const UltrametricSpace& space, const PointSet& a, const Grade& eps);
PointSet closure_eps(const UltrametricSpace& space, const PointSet& a, const Grade& eps);

struct TruthSet {
  Formula formula;
  PointSet points;
};

TruthSet truthset(const Model& model, const Formula& f);
bool holds(const Model& model, std::size_t world, const Formula& f);
bool holds(const Model& model, const std::string& world, const Formula& f);

enum class DegreeKind { Stability, Plausibility };

/// Threshold of the stability or plausibility of a formula at a world.
///
/// Stability: [eps]f holds iff eps < threshold, or eps <= threshold when
/// attained (only when f is true everywhere, threshold 1).
/// Plausibility: <eps>f holds iff eps >= threshold; `level` is 1 - threshold.
/// An absent threshold means no grade works.
struct DegreeReport {
  DegreeKind kind;
  std::optional<Grade> threshold;
  bool attained = false;
  std::optional<Grade> level;

  /// Whether the report predicts the modality at grade eps to hold.
  bool predicts(const Grade& eps) const;
};

DegreeReport stability_degree(const Model& model, std::size_t world, const Formula& f);
DegreeReport plausibility_degree(const Model& model, std::size_t world, const Formula& f);

}  // namespace umlogic
