#include "umlogic/generate.hpp"

#include <algorithm>
#include <set>

namespace umlogic {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Formula random_formula_at(Rng& rng, const FormulaShape& shape, std::size_t depth) {
  if (depth == 0 || pick(rng, 4) == 0) return Formula::atom(shape.atoms[pick(rng, shape.atoms.size())]);

  std::vector<Connective> choices{Connective::Not, Connective::And};
  if (shape.sugar) {
    choices.push_back(Connective::Or);
    choices.push_back(Connective::Implies);
  }
  if (shape.modal && !shape.grades.empty()) {
    choices.push_back(Connective::Box);
    choices.push_back(Connective::Box);
    if (shape.sugar) choices.push_back(Connective::Diamond);
  }
  auto sub = [&] { return random_formula_at(rng, shape, depth - 1); };
  auto grade = [&] { return shape.grades[pick(rng, shape.grades.size())]; };
  switch (choices[pick(rng, choices.size())]) {
    case Connective::Not: return Formula::negation(sub());
    case Connective::And: {
      auto a = sub();
      return Formula::conjunction(a, sub());
    }
    case Connective::Or: {
      auto a = sub();
      return Formula::disjunction(a, sub());
    }
    case Connective::Implies: {
      auto a = sub();
      return Formula::implication(a, sub());
    }
    case Connective::Box: {
      auto g = grade();
      return Formula::box(g, sub());
    }
    case Connective::Diamond: {
      auto g = grade();
      return Formula::diamond(g, sub());
    }
    default: break;
  }
  return Formula::atom(shape.atoms.front());
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  if (shape.atoms.empty()) throw std::invalid_argument("formula shape needs at least one atom");
  return random_formula_at(rng, shape, shape.max_depth);
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atom_names, const std::vector<Grade>& grades,
                                        std::size_t max_depth) {
  std::set<Formula> seen;
  std::vector<Formula> all;
  auto add = [&](Formula f) {
    if (seen.insert(f).second) all.push_back(std::move(f));
  };
  for (const auto& a : atom_names) add(Formula::atom(a));
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::vector<Formula> prev = all;
    for (const auto& f : prev) {
      add(Formula::negation(f));
      for (const auto& g : grades) add(Formula::box(g, f));
    }
    for (const auto& f : prev) {
      for (const auto& h : prev) add(Formula::conjunction(f, h));
    }
  }
  return all;
}

UltrametricSpace random_ultrametric_space(Rng& rng, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::vector<Grade>> d(n, std::vector<Grade>(n));
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < n; ++i) clusters.push_back({i});

  std::vector<int> heights;
  for (std::size_t i = 0; i + 1 < n; ++i) heights.push_back(static_cast<int>(pick(rng, 16)) + 1);
  std::sort(heights.begin(), heights.end());

  for (int h : heights) {
    const std::size_t a = pick(rng, clusters.size());
    std::size_t b = pick(rng, clusters.size() - 1);
    if (b >= a) ++b;
    const Grade height{h, 16};
    for (auto x : clusters[a]) {
      for (auto y : clusters[b]) d[x][y] = d[y][x] = height;
    }
    clusters[a].insert(clusters[a].end(), clusters[b].begin(), clusters[b].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return UltrametricSpace(std::move(names), std::move(d));
}

PointSet random_subset(Rng& rng, std::size_t points) {
  PointSet s(points);
  for (std::size_t i = 0; i < points; ++i) {
    if (pick(rng, 2)) s.insert(i);
  }
  return s;
}

Valuation random_valuation(Rng& rng, std::size_t points, const std::vector<std::string>& atom_names) {
  Valuation v;
  for (const auto& a : atom_names) v.emplace(a, random_subset(rng, points));
  return v;
}

Bindings random_bindings(Rng& rng, Schema schema, const FormulaShape& shape) {
  Bindings b;
  b.formulas.emplace("phi", random_formula(rng, shape));
  if (schema == Schema::K) b.formulas.emplace("psi", random_formula(rng, shape));
  auto grade = [&] { return shape.grades[pick(rng, shape.grades.size())]; };
  if (schema == Schema::TI || schema == Schema::UM3) {
    Grade g = grade();
    Grade h = grade();
    if (schema == Schema::UM3 && g < h) std::swap(g, h);
    b.grades.emplace("gamma", g);
    b.grades.emplace("delta", h);
  } else {
    b.grades.emplace("eps", grade());
  }
  return b;
}

}  // namespace umlogic
