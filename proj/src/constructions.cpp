#include "umlogic/constructions.hpp"

#include <set>

namespace umlogic {

Model disjoint_union(const std::vector<Model>& models) {
  if (models.empty()) throw SpaceError("disjoint union of zero models");
  std::vector<std::string> names;
  std::vector<std::size_t> component;
  std::vector<std::size_t> local;
  for (std::size_t c = 0; c < models.size(); ++c) {
    const auto& s = *models[c].space;
    for (std::size_t i = 0; i < s.size(); ++i) {
      names.push_back(std::to_string(c) + ":" + s.point(i));
      component.push_back(c);
      local.push_back(i);
    }
  }
  const std::size_t n = names.size();
  std::vector<std::vector<Grade>> d(n, std::vector<Grade>(n, Grade::sentinel()));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (component[x] == component[y]) d[x][y] = models[component[x]].space->distance(local[x], local[y]);
    }
  }
  auto space = std::make_shared<const UltrametricSpace>(std::move(names), std::move(d));

  Valuation v;
  std::size_t offset = 0;
  for (const auto& m : models) {
    for (const auto& [atom, set] : m.valuation) {
      auto [it, inserted] = v.try_emplace(atom, n);
      for (auto i : set.members()) it->second.insert(offset + i);
    }
    offset += m.space->size();
  }
  return Model(std::move(space), std::move(v));
}

Model epsilon_subspace(const Model& model, std::size_t x, const Grade& eps) {
  const auto& s = *model.space;
  if (x >= s.size()) throw SpaceError("point index out of range");
  const auto members = ball(s, x, eps).members();
  std::vector<std::string> names;
  std::vector<std::vector<Grade>> d(members.size(), std::vector<Grade>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    names.push_back(s.point(members[i]));
    for (std::size_t j = 0; j < members.size(); ++j) d[i][j] = s.distance(members[i], members[j]);
  }
  Valuation v;
  for (const auto& [atom, set] : model.valuation) {
    PointSet restricted(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (set.contains(members[i])) restricted.insert(i);
    }
    v.emplace(atom, std::move(restricted));
  }
  return Model(std::make_shared<const UltrametricSpace>(std::move(names), std::move(d)), std::move(v));
}

void require_total(const UltrametricSpace& src, const UltrametricSpace& tgt, const PointMap& pm) {
  if (pm.image.size() != src.size())
    throw MorphismError("map covers " + std::to_string(pm.image.size()) + " of " + std::to_string(src.size()) +
                        " source points");
  for (std::size_t i = 0; i < pm.image.size(); ++i) {
    if (pm.image[i] >= tgt.size()) throw MorphismError("image of '" + src.point(i) + "' is not a target point");
  }
  if (pm.k.is_zero()) throw MorphismError("scaling constant k must be positive");
}

namespace {

void check_geometry(const UltrametricSpace& src, const UltrametricSpace& tgt, const PointMap& pm,
                    MorphismVerdict& verdict) {
  const Grade one = Grade::one();
  for (std::size_t w = 0; w < src.size() && verdict.forward_ok; ++w) {
    for (std::size_t v = 0; v < src.size(); ++v) {
      const Grade& d = src.distance(w, v);
      if (d > one) continue;
      const Grade bound = pm.k * d;
      const Grade& image_d = tgt.distance(pm.image[w], pm.image[v]);
      if (image_d > bound) {
        verdict.forward_ok = false;
        verdict.witnesses.push_back({"forward",
                                     {w, v},
                                     {pm.image[w], pm.image[v]},
                                     std::nullopt,
                                     d,
                                     "d(" + src.point(w) + "," + src.point(v) + ") = " + d.str() + " but d'(f(" +
                                         src.point(w) + "),f(" + src.point(v) + ")) = " + image_d.str() + " > " +
                                         bound.str()});
        break;
      }
    }
  }

  const Grade inv_k = pm.k.reciprocal();
  for (std::size_t w = 0; w < src.size() && verdict.back_ok; ++w) {
    const std::size_t fw = pm.image[w];
    for (std::size_t target = 0; target < tgt.size(); ++target) {
      const Grade& eps = tgt.distance(fw, target);
      if (eps > one) continue;
      const Grade radius = inv_k * eps;
      bool found = false;
      for (std::size_t v = 0; v < src.size() && !found; ++v) {
        found = pm.image[v] == target && src.distance(w, v) <= radius;
      }
      if (!found) {
        verdict.back_ok = false;
        verdict.witnesses.push_back({"back",
                                     {w},
                                     {fw, target},
                                     std::nullopt,
                                     eps,
                                     "d'(f(" + src.point(w) + ")," + tgt.point(target) + ") = " + eps.str() +
                                         " but no preimage of " + tgt.point(target) + " lies within " +
                                         radius.str() + " of " + src.point(w)});
        break;
      }
    }
  }
}

}  // namespace

MorphismVerdict check_bounded_morphism(const Model& src, const Model& tgt, const PointMap& pm) {
  require_total(*src.space, *tgt.space, pm);
  MorphismVerdict verdict;

  std::set<std::string> names;
  for (const auto& [a, s] : src.valuation) names.insert(a);
  for (const auto& [a, s] : tgt.valuation) names.insert(a);
  for (const auto& atom : names) {
    const PointSet vs = src.atom(atom);
    const PointSet vt = tgt.atom(atom);
    for (std::size_t w = 0; w < src.space->size(); ++w) {
      if (vs.contains(w) != vt.contains(pm.image[w])) {
        verdict.atoms_ok = false;
        verdict.witnesses.push_back({"atoms",
                                     {w},
                                     {pm.image[w]},
                                     atom,
                                     std::nullopt,
                                     "atom " + atom + " is " + (vs.contains(w) ? "true" : "false") + " at " +
                                         src.space->point(w) + " but " + (vt.contains(pm.image[w]) ? "true" : "false") +
                                         " at its image " + tgt.space->point(pm.image[w])});
        break;
      }
    }
    if (!verdict.atoms_ok) break;
  }

  check_geometry(*src.space, *tgt.space, pm, verdict);
  return verdict;
}

MorphismVerdict check_frame_morphism(const UltrametricSpace& src, const UltrametricSpace& tgt, const PointMap& pm) {
  require_total(src, tgt, pm);
  MorphismVerdict verdict;
  check_geometry(src, tgt, pm, verdict);
  return verdict;
}

BilipschitzReport bilipschitz_bounds(const UltrametricSpace& src, const UltrametricSpace& tgt, const PointMap& pm) {
  require_total(src, tgt, pm);
  if (src.size() != tgt.size()) throw MorphismError("not bijective: source and target differ in size");
  std::vector<bool> hit(tgt.size(), false);
  for (std::size_t i = 0; i < pm.image.size(); ++i) {
    if (hit[pm.image[i]])
      throw MorphismError("not bijective: two source points map to '" + tgt.point(pm.image[i]) +
                          "'; bi-Lipschitz bounds only follow for bijective morphisms");
    hit[pm.image[i]] = true;
  }

  BilipschitzReport report;
  report.tightest_k = Grade::one();
  report.holds_for_k = true;
  const Grade k_inv = pm.k.reciprocal();
  for (std::size_t x = 0; x < src.size(); ++x) {
    for (std::size_t y = x + 1; y < src.size(); ++y) {
      const Grade& d = src.distance(x, y);
      const Grade& dd = tgt.distance(pm.image[x], pm.image[y]);
      if (d.is_zero() || dd.is_zero()) throw MorphismError("zero distance between distinct points");
      report.tightest_k = max(report.tightest_k, max(dd / d, d / dd));
      if (dd > pm.k * d || k_inv * d > dd) report.holds_for_k = false;
    }
  }
  report.frame_morphism = check_frame_morphism(src, tgt, pm).accepted();
  return report;
}

}  // namespace umlogic
