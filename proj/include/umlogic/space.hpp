#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "umlogic/grade.hpp"
#include "umlogic/point_set.hpp"

namespace umlogic {

class SpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite point set with a dense exact distance matrix.
///
/// Construction only checks shape (square matrix, distinct names). Whether
/// the distances actually form an ultra-metric is answered by
/// validate_space(); loaders reject spaces that fail it, but tests also
/// build plain metric spaces on purpose.
class UltrametricSpace {
 public:
  UltrametricSpace() = default;
  UltrametricSpace(std::vector<std::string> points, std::vector<std::vector<Grade>> distances);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(std::size_t i) const { return points_.at(i); }

  bool contains(const std::string& name) const { return index_.contains(name); }
  /// Throws SpaceError for unknown names.
  std::size_t index_of(const std::string& name) const;

  const Grade& distance(std::size_t x, std::size_t y) const { return dist_[x * points_.size() + y]; }

 private:
  std::vector<std::string> points_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Grade> dist_;
};

/// Non-negativity holds by construction of Grade and is not checked.
enum class Axiom { SelfDistance, Identity, Symmetry, StrongTriangle };

const char* axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  /// Witnessing pair (x, y) or triple (x, y, z), as point indices.
  std::vector<std::size_t> witness;
  std::string message;
};

/// Empty iff every ultra-metric axiom holds. For the strong triangle law the
/// triple (x, y, z) witnesses d(x,y) > max(d(x,z), d(y,z)). Stops after
/// `limit` violations.
std::vector<Violation> validate_space(const UltrametricSpace& space, std::size_t limit = 64);

enum class CantorNaming { Bits, Worlds };

/// All binary strings of length `depth`, ordered from 1...1 down to 0...0,
/// with d(x,y) = 2^-n for the first differing (1-based) position n.
/// With CantorNaming::Worlds the points are called w0, w1, ... in that order.
UltrametricSpace cantor_space(std::size_t depth, CantorNaming naming = CantorNaming::Bits);

/// Bit string of the i-th point of cantor_space(depth).
std::string cantor_sequence(std::size_t depth, std::size_t index);

/// Distance between two equal-length binary strings under the
/// first-difference metric.
Grade sequence_distance(const std::string& a, const std::string& b);

/// Closed ball {y : d(x,y) <= eps}.
PointSet ball(const UltrametricSpace& space, std::size_t x, const Grade& eps);

/// Sorted, deduplicated distances. Contains 0 for any non-empty space.
std::vector<Grade> realized_distances(const UltrametricSpace& space);
/// Row-major n*n matrix of indices into realized_distances(space).
std::vector<std::uint32_t> distance_ranks(const UltrametricSpace& space, const std::vector<Grade>& radii);

PointSet point_set(const UltrametricSpace& space, const std::vector<std::string>& names);
std::vector<std::string> point_names(const UltrametricSpace& space, const PointSet& set);

/// Atom name to truth set. Atoms not present denote the empty set.
using Valuation = std::map<std::string, PointSet>;

/// Space plus valuation. The space is shared: it is immutable and usually
/// much larger than the valuation.
struct Model {
  Model() = default;
  Model(std::shared_ptr<const UltrametricSpace> s, Valuation v = {});

  std::shared_ptr<const UltrametricSpace> space;
  Valuation valuation;

  /// Truth set of an atom, the empty set if the atom is unvalued.
  PointSet atom(const std::string& name) const;
};

}  // namespace umlogic
