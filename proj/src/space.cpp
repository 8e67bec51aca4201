#include "umlogic/space.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace umlogic {

UltrametricSpace::UltrametricSpace(std::vector<std::string> points, std::vector<std::vector<Grade>> distances)
    : points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (distances.size() != n) throw SpaceError("distance matrix has " + std::to_string(distances.size()) +
                                              " rows for " + std::to_string(n) + " points");
  dist_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (distances[i].size() != n) throw SpaceError("distance row " + std::to_string(i) + " has wrong length");
    for (auto& d : distances[i]) dist_.push_back(std::move(d));
    if (points_[i].empty()) throw SpaceError("empty point name");
    if (!index_.emplace(points_[i], i).second) throw SpaceError("duplicate point '" + points_[i] + "'");
  }
}

std::size_t UltrametricSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw SpaceError("unknown point '" + name + "'");
  return it->second;
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::SelfDistance: return "self-distance";
    case Axiom::Identity: return "identity-of-indiscernibles";
    case Axiom::Symmetry: return "symmetry";
    case Axiom::StrongTriangle: return "strong-triangle";
  }
  return "?";
}

std::vector<Violation> validate_space(const UltrametricSpace& s, std::size_t limit) {
  std::vector<Violation> out;
  const std::size_t n = s.size();
  auto full = [&] { return out.size() >= limit; };
  auto name = [&](std::size_t i) { return s.point(i); };

  for (std::size_t x = 0; x < n && !full(); ++x) {
    if (!s.distance(x, x).is_zero())
      out.push_back({Axiom::SelfDistance, {x, x}, "d(" + name(x) + "," + name(x) + ") = " + s.distance(x, x).str()});
  }
  for (std::size_t x = 0; x < n && !full(); ++x) {
    for (std::size_t y = 0; y < n && !full(); ++y) {
      if (x != y && s.distance(x, y).is_zero())
        out.push_back({Axiom::Identity, {x, y}, "d(" + name(x) + "," + name(y) + ") = 0 for distinct points"});
      if (x < y && s.distance(x, y) != s.distance(y, x))
        out.push_back({Axiom::Symmetry, {x, y},
                       "d(" + name(x) + "," + name(y) + ") = " + s.distance(x, y).str() + " but d(" + name(y) + "," +
                           name(x) + ") = " + s.distance(y, x).str()});
    }
  }
  // The strong triangle check compares ranks of distances rather than the
  // rationals themselves; it is the O(n^3) part.
  const auto rank = distance_ranks(s, realized_distances(s));
  for (std::size_t x = 0; x < n && !full(); ++x) {
    for (std::size_t y = 0; y < n && !full(); ++y) {
      const std::uint32_t dxy = rank[x * n + y];
      if (dxy == 0) continue;
      const auto* rx = reinterpret_cast<const std::int32_t*>(&rank[x * n]);
      const auto* ry = reinterpret_cast<const std::int32_t*>(&rank[y * n]);
      const auto d = static_cast<std::int32_t>(dxy);
      int any = 0;
      for (std::size_t z = 0; z < n; ++z) any |= (d > rx[z]) & (d > ry[z]);
      if (!any) continue;
      for (std::size_t z = 0; z < n && !full(); ++z) {
        if (dxy <= std::max(rank[x * n + z], rank[y * n + z])) continue;
        const Grade& bound = max(s.distance(x, z), s.distance(y, z));
        out.push_back({Axiom::StrongTriangle, {x, y, z},
                       "d(" + name(x) + "," + name(y) + ") = " + s.distance(x, y).str() + " > max(d(" + name(x) +
                           "," + name(z) + "), d(" + name(y) + "," + name(z) + ")) = " + bound.str()});
      }
    }
  }
  return out;
}

std::string cantor_sequence(std::size_t depth, std::size_t index) {
  std::string bits(depth, '0');
  const std::size_t value = ((std::size_t{1} << depth) - 1) - index;
  for (std::size_t i = 0; i < depth; ++i) {
    if ((value >> (depth - 1 - i)) & 1U) bits[i] = '1';
  }
  return bits;
}

Grade sequence_distance(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) throw SpaceError("sequences '" + a + "' and '" + b + "' differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return Grade{Rational(1, boost::multiprecision::cpp_int(1) << static_cast<unsigned>(i + 1))};
  }
  return Grade::zero();
}

UltrametricSpace cantor_space(std::size_t depth, CantorNaming naming) {
  if (depth == 0) throw SpaceError("Cantor depth must be at least 1");
  if (depth > 20) throw SpaceError("Cantor depth " + std::to_string(depth) + " is too large");
  const std::size_t n = std::size_t{1} << depth;
  std::vector<std::string> seqs(n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    seqs[i] = cantor_sequence(depth, i);
    names[i] = naming == CantorNaming::Bits ? seqs[i] : "w" + std::to_string(i);
  }
  std::vector<std::vector<Grade>> d(n, std::vector<Grade>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = sequence_distance(seqs[i], seqs[j]);
  }
  return UltrametricSpace(std::move(names), std::move(d));
}

PointSet ball(const UltrametricSpace& s, std::size_t x, const Grade& eps) {
  if (x >= s.size()) throw SpaceError("point index out of range");
  PointSet out(s.size());
  for (std::size_t y = 0; y < s.size(); ++y) {
    if (s.distance(x, y) <= eps) out.insert(y);
  }
  return out;
}

std::vector<Grade> realized_distances(const UltrametricSpace& s) {
  std::unordered_set<Grade, GradeHash> seen;
  const Grade* last = nullptr;
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      const Grade& d = s.distance(x, y);
      if (last && *last == d) continue;
      seen.insert(d);
      last = &d;
    }
  }
  std::vector<Grade> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> distance_ranks(const UltrametricSpace& s, const std::vector<Grade>& radii) {
  std::unordered_map<Grade, std::uint32_t, GradeHash> rank_of;
  for (std::size_t i = 0; i < radii.size(); ++i) rank_of.emplace(radii[i], static_cast<std::uint32_t>(i));
  const std::size_t n = s.size();
  std::vector<std::uint32_t> out(n * n);
  const Grade* last = nullptr;
  std::uint32_t last_rank = 0;
  for (std::size_t i = 0; i < n * n; ++i) {
    const Grade& d = s.distance(i / n, i % n);
    if (!last || !(*last == d)) {
      auto it = rank_of.find(d);
      if (it == rank_of.end()) throw SpaceError("distance " + d.str() + " is not among the given radii");
      last = &d;
      last_rank = it->second;
    }
    out[i] = last_rank;
  }
  return out;
}

PointSet point_set(const UltrametricSpace& s, const std::vector<std::string>& names) {
  PointSet out(s.size());
  for (const auto& n : names) out.insert(s.index_of(n));
  return out;
}

std::vector<std::string> point_names(const UltrametricSpace& s, const PointSet& set) {
  std::vector<std::string> out;
  for (auto i : set.members()) out.push_back(s.point(i));
  return out;
}

Model::Model(std::shared_ptr<const UltrametricSpace> s, Valuation v) : space(std::move(s)), valuation(std::move(v)) {
  if (!space) throw SpaceError("model without a space");
  for (const auto& [atom, set] : valuation) {
    if (set.universe() != space->size())
      throw SpaceError("valuation of '" + atom + "' does not match the space size");
  }
}

PointSet Model::atom(const std::string& name) const {
  auto it = valuation.find(name);
  return it == valuation.end() ? PointSet(space->size()) : it->second;
}

}  // namespace umlogic
