#pragma once

#include <string>
#include <vector>

#include "umlogic/space.hpp"

namespace umlogic {

/// One distinct closed ball of the space, at the smallest realized radius
/// that produces it.
struct BallNode {
  PointSet points;
  Grade radius;
  std::vector<std::size_t> children;
};

/// Distinct balls ordered by decreasing radius, then by first member. In an
/// ultra-metric space balls nest, so immediate containment gives a forest
/// (a tree when some radius covers everything); roots come first.
std::vector<BallNode> ball_hierarchy(const UltrametricSpace& space);

/// Graphviz rendering of ball_hierarchy().
std::string dendrogram_dot(const UltrametricSpace& space);

}  // namespace umlogic
