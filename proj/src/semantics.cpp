#include "umlogic/semantics.hpp"

#include <algorithm>
#include <unordered_map>

namespace umlogic {

BallIndex::BallIndex(const UltrametricSpace& space) : space_(&space), radii_(realized_distances(space)) {
  rank_ = distance_ranks(space, radii_);
  balls_.resize(radii_.size());
}

std::size_t BallIndex::rank_of(const Grade& eps) const {
  auto it = std::upper_bound(radii_.begin(), radii_.end(), eps);
  return it == radii_.begin() ? 0 : static_cast<std::size_t>(it - radii_.begin()) - 1;
}

const PointSet& BallIndex::ball(std::size_t x, std::size_t rank) const {
  auto& level = balls_.at(rank);
  if (level.empty()) {
    const std::size_t n = size();
    level.assign(n, PointSet(n));
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t y = 0; y < n; ++y) {
        if (rank_[c * n + y] <= rank) level[c].insert(y);
      }
    }
  }
  return level.at(x);
}

void BallIndex::interior_into(PointSet& out, const PointSet& a, std::size_t rank) const {
  out = PointSet(size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (ball(x, rank).is_subset_of(a)) out.insert(x);
  }
}

void BallIndex::closure_into(PointSet& out, const PointSet& a, std::size_t rank) const {
  out = PointSet(size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (ball(x, rank).intersects(a)) out.insert(x);
  }
}

PointSet BallIndex::interior(const PointSet& a, const Grade& eps) const {
  PointSet out;
  interior_into(out, a, rank_of(eps));
  return out;
}

PointSet BallIndex::closure(const PointSet& a, const Grade& eps) const {
  PointSet out;
  closure_into(out, a, rank_of(eps));
  return out;
}

Evaluator::Evaluator(const BallIndex& index, const Formula& formula) : index_(&index) {
  const auto subs = subformulas(desugar(formula));
  std::unordered_map<Formula, std::size_t, FormulaHash> slot_of;
  std::vector<std::pair<std::string, std::size_t>> atom_pairs;
  steps_.reserve(subs.size());
  for (const auto& f : subs) {
    const std::size_t slot = steps_.size();
    switch (f.kind()) {
      case Connective::Atom:
        steps_.push_back({Op::Atom});
        atom_pairs.emplace_back(f.name(), slot);
        break;
      case Connective::Not:
        steps_.push_back({Op::Not, slot_of.at(f.operand())});
        break;
      case Connective::And:
        steps_.push_back({Op::And, slot_of.at(f.lhs()), slot_of.at(f.rhs())});
        break;
      case Connective::Box:
        steps_.push_back({Op::Box, slot_of.at(f.operand()), 0, index.rank_of(f.grade())});
        break;
      default:
        throw std::logic_error("desugar left a derived connective");
    }
    slot_of.emplace(f, slot);
  }
  std::sort(atom_pairs.begin(), atom_pairs.end());
  for (auto& [name, slot] : atom_pairs) {
    atoms_.push_back(name);
    atom_slots_.push_back(slot);
  }
  slots_.assign(steps_.size(), PointSet(index.size()));
}

const PointSet& Evaluator::evaluate(const Valuation& valuation) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    auto it = valuation.find(atoms_[i]);
    if (it == valuation.end()) {
      slots_[atom_slots_[i]] = PointSet(index_->size());
    } else {
      if (it->second.universe() != index_->size()) throw SpaceError("valuation does not match the space size");
      slots_[atom_slots_[i]] = it->second;
    }
  }
  return run();
}

const PointSet& Evaluator::evaluate(std::span<const PointSet> atom_sets) {
  if (atom_sets.size() != atoms_.size()) throw std::invalid_argument("wrong number of atom truth sets");
  for (std::size_t i = 0; i < atoms_.size(); ++i) slots_[atom_slots_[i]] = atom_sets[i];
  return run();
}

const PointSet& Evaluator::run() {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    PointSet& out = slots_[i];
    switch (s.op) {
      case Op::Atom:
        break;
      case Op::Not:
        out = slots_[s.a];
        out.complement();
        break;
      case Op::And:
        out = slots_[s.a];
        out &= slots_[s.b];
        break;
      case Op::Box: {
        const PointSet& a = slots_[s.a];
        out.clear();
        for (std::size_t x = 0; x < index_->size(); ++x) {
          if (index_->ball(x, s.rank).is_subset_of(a)) out.insert(x);
        }
        break;
      }
    }
  }
  return slots_.back();
}

PointSet interior_eps(const UltrametricSpace& space, const PointSet& a, const Grade& eps) {
  PointSet out(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    bool inside = true;
    for (std::size_t y = 0; y < space.size() && inside; ++y) {
      if (space.distance(x, y) <= eps && !a.contains(y)) inside = false;
    }
    if (inside) out.insert(x);
  }
  return out;
}

PointSet closure_eps(const UltrametricSpace& space, const PointSet& a, const Grade& eps) {
  PointSet out(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (space.distance(x, y) <= eps && a.contains(y)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

TruthSet truthset(const Model& model, const Formula& f) {
  BallIndex index(*model.space);
  Evaluator ev(index, f);
  return TruthSet{f, ev.evaluate(model.valuation)};
}

bool holds(const Model& model, std::size_t world, const Formula& f) {
  if (world >= model.space->size()) throw SpaceError("world index out of range");
  return truthset(model, f).points.contains(world);
}

bool holds(const Model& model, const std::string& world, const Formula& f) {
  return holds(model, model.space->index_of(world), f);
}

bool DegreeReport::predicts(const Grade& eps) const {
  if (!threshold) return false;
  if (kind == DegreeKind::Plausibility) return eps >= *threshold;
  return attained ? eps <= *threshold : eps < *threshold;
}

DegreeReport stability_degree(const Model& model, std::size_t world, const Formula& f) {
  const auto& space = *model.space;
  if (world >= space.size()) throw SpaceError("world index out of range");
  const PointSet truth = truthset(model, f).points;
  DegreeReport r{DegreeKind::Stability, std::nullopt, false, std::nullopt};
  if (!truth.contains(world)) return r;
  for (std::size_t v = 0; v < space.size(); ++v) {
    if (truth.contains(v)) continue;
    const Grade& d = space.distance(world, v);
    if (!r.threshold || d < *r.threshold) r.threshold = d;
  }
  if (!r.threshold) {
    r.threshold = Grade::one();
    r.attained = true;
  }
  return r;
}

DegreeReport plausibility_degree(const Model& model, std::size_t world, const Formula& f) {
  const auto& space = *model.space;
  if (world >= space.size()) throw SpaceError("world index out of range");
  const PointSet truth = truthset(model, f).points;
  DegreeReport r{DegreeKind::Plausibility, std::nullopt, true, std::nullopt};
  for (auto v : truth.members()) {
    const Grade& d = space.distance(world, v);
    if (!r.threshold || d < *r.threshold) r.threshold = d;
  }
  if (r.threshold && *r.threshold <= Grade::one()) r.level = Grade{Rational(1) - r.threshold->value()};
  return r;
}

}  // namespace umlogic
