#include "umlogic/dendrogram.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace umlogic {

std::vector<BallNode> ball_hierarchy(const UltrametricSpace& space) {
  std::vector<BallNode> nodes;
  for (const Grade& r : realized_distances(space)) {
    for (std::size_t x = 0; x < space.size(); ++x) {
      PointSet b = ball(space, x, r);
      auto same = [&](const BallNode& n) { return n.points == b; };
      if (std::none_of(nodes.begin(), nodes.end(), same)) nodes.push_back({std::move(b), r, {}});
    }
  }
  std::stable_sort(nodes.begin(), nodes.end(), [](const BallNode& a, const BallNode& b) {
    if (a.radius != b.radius) return a.radius > b.radius;
    return a.points.members().front() < b.points.members().front();
  });

  // Parent: the smallest strictly larger ball containing the node.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::optional<std::size_t> parent;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i || nodes[j].points == nodes[i].points || !nodes[i].points.is_subset_of(nodes[j].points)) continue;
      if (!parent || nodes[j].points.count() < nodes[*parent].points.count()) parent = j;
    }
    if (parent) nodes[*parent].children.push_back(i);
  }
  return nodes;
}

std::string dendrogram_dot(const UltrametricSpace& space) {
  const auto nodes = ball_hierarchy(space);
  std::ostringstream out;
  out << "digraph balls {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  b" << i << " [label=\"";
    const auto names = point_names(space, nodes[i].points);
    for (std::size_t j = 0; j < names.size(); ++j) out << (j ? "," : "{") << names[j];
    out << "}\\nr=" << nodes[i].radius.str() << "\"];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (auto c : nodes[i].children) out << "  b" << i << " -> b" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace umlogic
