#include "umlogic/harness.hpp"

#include "umlogic/generate.hpp"
#include "umlogic/semantics.hpp"
#include "umlogic/validity.hpp"

namespace umlogic {

namespace {

std::size_t cantor_value(std::size_t depth, std::size_t index) { return ((std::size_t{1} << depth) - 1) - index; }
std::size_t cantor_index(std::size_t depth, std::size_t value) { return ((std::size_t{1} << depth) - 1) - value; }

void record(PropertyResult& r, bool ok, const std::string& witness) {
  ++r.samples;
  if (ok) return;
  ++r.discrepancies;
  if (!r.witness) r.witness = witness;
}

std::vector<Grade> with_one(std::vector<Grade> grades) {
  std::vector<Grade> out;
  for (auto& g : grades) {
    if (g <= Grade::one()) out.push_back(g);
  }
  if (out.empty() || out.back() != Grade::one()) out.push_back(Grade::one());
  return out;
}

std::vector<Formula> axiom_instances(Rng& rng, std::size_t per_schema, const FormulaShape& shape) {
  std::vector<Formula> out;
  for (auto s : all_schemas()) {
    for (std::size_t i = 0; i < per_schema; ++i)
      out.push_back(instantiate_axiom(schema_name(s), random_bindings(rng, s, shape)));
  }
  return out;
}

PropertyResult union_satisfaction(Rng& rng, const HarnessConfig& cfg) {
  PropertyResult r;
  r.name = "union_satisfaction";
  const std::vector<std::string> names{"p", "q"};
  std::uniform_int_distribution<std::size_t> size(1, cfg.max_component_points);
  for (std::size_t m = 0; m < cfg.models; ++m) {
    std::vector<Model> parts;
    for (int c = 0; c < 2; ++c) {
      auto space = std::make_shared<const UltrametricSpace>(random_ultrametric_space(rng, size(rng)));
      parts.emplace_back(space, random_valuation(rng, space->size(), names));
    }
    const Model uni = disjoint_union(parts);
    FormulaShape shape;
    shape.max_depth = cfg.formula_depth;
    shape.grades = with_one(realized_distances(*uni.space));
    for (std::size_t k = 0; k < cfg.formulas; ++k) {
      const Formula f = random_formula(rng, shape);
      const PointSet whole = truthset(uni, f).points;
      std::size_t offset = 0;
      bool ok = true;
      std::string witness;
      for (std::size_t c = 0; c < parts.size() && ok; ++c) {
        const PointSet local = truthset(parts[c], f).points;
        for (std::size_t w = 0; w < parts[c].space->size(); ++w) {
          if (local.contains(w) != whole.contains(offset + w)) {
            ok = false;
            witness = "model " + std::to_string(m) + ", component " + std::to_string(c) + ", world " +
                      parts[c].space->point(w) + ", formula " + print(f);
            break;
          }
        }
        offset += parts[c].space->size();
      }
      record(r, ok, witness);
    }
  }
  return r;
}

PropertyResult union_validity(Rng& rng, const HarnessConfig& cfg) {
  PropertyResult r;
  r.name = "union_validity";
  const Model cantor(std::make_shared<const UltrametricSpace>(cantor_space(2)));
  const Model uni = disjoint_union({cantor, cantor, cantor});
  FormulaShape shape;
  shape.atoms = {"p"};
  shape.max_depth = 1;
  shape.grades = with_one(realized_distances(*cantor.space));
  for (const auto& f : axiom_instances(rng, cfg.instances, shape)) {
    if (!valid_in_model(*cantor.space, f).valid) continue;
    const auto res = valid_in_model(*uni.space, f);
    record(r, res.valid, "formula " + print(f) + " valid on Cantor depth 2 but not on three copies");
  }
  return r;
}

PropertyResult subspace_validity(Rng& rng, const HarnessConfig& cfg) {
  PropertyResult r;
  r.name = "subspace_validity";
  const Model cantor(std::make_shared<const UltrametricSpace>(cantor_space(3)));
  const auto radii = realized_distances(*cantor.space);
  FormulaShape shape;
  shape.atoms = {"p"};
  shape.max_depth = 1;
  shape.grades = with_one(radii);
  for (const auto& f : axiom_instances(rng, cfg.instances, shape)) {
    if (!valid_in_model(*cantor.space, f).valid) continue;
    for (std::size_t x = 0; x < cantor.space->size(); ++x) {
      for (const auto& eps : radii) {
        const Model sub = epsilon_subspace(cantor, x, eps);
        record(r, valid_in_model(*sub.space, f).valid,
               "formula " + print(f) + " fails on B_" + eps.str() + "(" + cantor.space->point(x) + ")");
      }
    }
  }
  return r;
}

struct MorphismCase {
  std::string label;
  Model src;
  Model tgt;
  PointMap map;
};

std::vector<MorphismCase> morphism_cases(Rng& rng) {
  const std::vector<std::string> names{"p", "q"};
  std::vector<MorphismCase> cases;

  auto rnd = std::make_shared<const UltrametricSpace>(random_ultrametric_space(rng, 5));
  Model m(rnd, random_valuation(rng, rnd->size(), names));
  PointMap id{{0, 1, 2, 3, 4}, Grade::one()};
  cases.push_back({"identity", m, m, id});

  auto c2 = std::make_shared<const UltrametricSpace>(cantor_space(2));
  Model swap_src(c2, random_valuation(rng, c2->size(), names));
  const PointMap swap = first_bit_swap(2);
  cases.push_back({"first_bit_swap", swap_src, Model(c2, pushforward(swap_src.valuation, swap, c2->size())), swap});

  auto c3 = std::make_shared<const UltrametricSpace>(cantor_space(3));
  auto c4 = std::make_shared<const UltrametricSpace>(cantor_space(4));
  Model trunc_tgt(c3, random_valuation(rng, c3->size(), names));
  const PointMap trunc = truncation_map(3);
  cases.push_back({"truncation", Model(c4, pullback(trunc_tgt.valuation, trunc, c4->size())), trunc_tgt, trunc});

  // Identity into a copy with every distance doubled: a k = 2 morphism.
  std::vector<std::vector<Grade>> doubled(c2->size(), std::vector<Grade>(c2->size()));
  for (std::size_t i = 0; i < c2->size(); ++i) {
    for (std::size_t j = 0; j < c2->size(); ++j) doubled[i][j] = c2->distance(i, j) * Grade{2};
  }
  auto c2x2 = std::make_shared<const UltrametricSpace>(c2->points(), doubled);
  Model scaled_src(c2, random_valuation(rng, c2->size(), names));
  cases.push_back({"scaled_k2", scaled_src, Model(c2x2, scaled_src.valuation), PointMap{{0, 1, 2, 3}, Grade{2}}});
  return cases;
}

PropertyResult morphism_transfer(Rng& rng, const HarnessConfig& cfg) {
  PropertyResult r;
  r.name = "morphism_transfer";
  for (auto& mc : morphism_cases(rng)) {
    const MorphismVerdict verdict = check_bounded_morphism(mc.src, mc.tgt, mc.map);
    record(r, verdict.accepted(), mc.label + ": expected an accepted bounded morphism");
    if (!verdict.accepted()) continue;

    const bool unit_k = mc.map.k == Grade::one();
    FormulaShape shape;
    shape.max_depth = cfg.formula_depth;
    shape.grades = with_one(realized_distances(*mc.src.space));
    FormulaShape flat = shape;
    flat.modal = false;

    for (std::size_t k = 0; k < cfg.formulas; ++k) {
      // Non-modal formulas, or any formula when k = 1: exact transfer.
      const Formula f = random_formula(rng, unit_k ? shape : flat);
      const PointSet src_truth = truthset(mc.src, f).points;
      const PointSet tgt_truth = truthset(mc.tgt, f).points;
      bool ok = true;
      std::string witness;
      for (std::size_t w = 0; w < mc.src.space->size() && ok; ++w) {
        if (src_truth.contains(w) != tgt_truth.contains(mc.map.image[w])) {
          ok = false;
          witness = mc.label + ": " + print(f) + " differs at " + mc.src.space->point(w);
        }
      }
      record(r, ok, witness);

      // <eps>phi at w implies <k*eps>phi at f(w) for non-modal phi.
      const Formula phi = random_formula(rng, flat);
      const Grade eps = shape.grades[std::uniform_int_distribution<std::size_t>(0, shape.grades.size() - 1)(rng)];
      const Grade scaled = mc.map.k * eps;
      if (scaled > Grade::one()) continue;
      const PointSet before = truthset(mc.src, Formula::diamond(eps, phi)).points;
      const PointSet after = truthset(mc.tgt, Formula::diamond(scaled, phi)).points;
      ok = true;
      for (auto w : before.members()) {
        if (!after.contains(mc.map.image[w])) {
          ok = false;
          witness = mc.label + ": <" + eps.str() + ">" + print(phi) + " at " + mc.src.space->point(w) +
                    " but not <" + scaled.str() + "> at its image";
          break;
        }
      }
      record(r, ok, witness);
    }
  }
  return r;
}

}  // namespace

bool HarnessReport::clean() const {
  for (const auto& p : properties) {
    if (p.discrepancies) return false;
  }
  return true;
}

nlohmann::json HarnessReport::to_json() const {
  nlohmann::json props = nlohmann::json::object();
  for (const auto& p : properties) {
    props[p.name] = {{"samples", p.samples},
                     {"discrepancies", p.discrepancies},
                     {"witness", p.witness ? nlohmann::json(*p.witness) : nlohmann::json(nullptr)}};
  }
  return {{"properties", props}, {"notes", notes}, {"clean", clean()}};
}

HarnessReport preservation_harness(const HarnessConfig& config) {
  Rng rng(config.seed);
  HarnessReport report;
  report.properties.push_back(union_satisfaction(rng, config));
  report.properties.push_back(union_validity(rng, config));
  report.properties.push_back(subspace_validity(rng, config));
  report.properties.push_back(morphism_transfer(rng, config));
  report.notes.push_back(
      "reverse transfer of <k*eps> formulas for k != 1 and modal depth > 1 is untested; only the forward direction "
      "and the k = 1 case are checked");
  return report;
}

PointMap truncation_map(std::size_t depth) {
  PointMap pm;
  const std::size_t n = std::size_t{1} << (depth + 1);
  for (std::size_t i = 0; i < n; ++i) pm.image.push_back(cantor_index(depth, cantor_value(depth + 1, i) >> 1));
  return pm;
}

PointMap first_bit_swap(std::size_t depth) {
  PointMap pm;
  const std::size_t n = std::size_t{1} << depth;
  for (std::size_t i = 0; i < n; ++i)
    pm.image.push_back(cantor_index(depth, cantor_value(depth, i) ^ (std::size_t{1} << (depth - 1))));
  return pm;
}

PointMap append_zero_map(std::size_t depth) {
  PointMap pm;
  const std::size_t n = std::size_t{1} << depth;
  for (std::size_t i = 0; i < n; ++i) pm.image.push_back(cantor_index(depth + 1, cantor_value(depth, i) << 1));
  return pm;
}

Valuation pullback(const Valuation& target, const PointMap& pm, std::size_t source_size) {
  Valuation out;
  for (const auto& [atom, set] : target) {
    PointSet s(source_size);
    for (std::size_t i = 0; i < source_size; ++i) {
      if (set.contains(pm.image[i])) s.insert(i);
    }
    out.emplace(atom, std::move(s));
  }
  return out;
}

Valuation pushforward(const Valuation& source, const PointMap& pm, std::size_t target_size) {
  Valuation out;
  for (const auto& [atom, set] : source) {
    PointSet s(target_size);
    for (auto i : set.members()) s.insert(pm.image[i]);
    out.emplace(atom, std::move(s));
  }
  return out;
}

}  // namespace umlogic
