#pragma once

// Reference implementations for tests. Everything here recomputes from the
// distance function with std::set and plain recursion, and never goes
// through BallIndex, Evaluator or desugar().

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "umlogic/formula.hpp"
#include "umlogic/space.hpp"

namespace oracle {

using Set = std::set<std::size_t>;
using Val = std::map<std::string, Set>;

/// 1/2^n for the first (1-based) differing position, by repeated halving.
inline umlogic::Grade first_difference(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  umlogic::Rational r = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r /= 2;
    if (a[i] != b[i]) return umlogic::Grade{r};
  }
  return umlogic::Grade::zero();
}

inline Set to_set(const umlogic::PointSet& s) {
  Set out;
  for (std::size_t i = 0; i < s.universe(); ++i) {
    if (s.contains(i)) out.insert(i);
  }
  return out;
}

inline umlogic::PointSet from_set(std::size_t n, const Set& s) {
  umlogic::PointSet out(n);
  for (auto i : s) out.insert(i);
  return out;
}

inline Set everything(const umlogic::UltrametricSpace& s) {
  Set out;
  for (std::size_t i = 0; i < s.size(); ++i) out.insert(i);
  return out;
}

inline Set interior(const umlogic::UltrametricSpace& s, const Set& a, const umlogic::Grade& eps) {
  Set out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    bool inside = true;
    for (std::size_t y = 0; y < s.size() && inside; ++y) {
      if (s.distance(x, y) <= eps && !a.contains(y)) inside = false;
    }
    if (inside) out.insert(x);
  }
  return out;
}

inline Set closure(const umlogic::UltrametricSpace& s, const Set& a, const umlogic::Grade& eps) {
  Set out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (auto y : a) {
      if (s.distance(x, y) <= eps) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

/// Direct satisfaction clauses, sugar included.
inline bool holds(const umlogic::UltrametricSpace& s, const Val& v, std::size_t w, const umlogic::Formula& f) {
  using umlogic::Connective;
  switch (f.kind()) {
    case Connective::Atom: {
      auto it = v.find(f.name());
      return it != v.end() && it->second.contains(w);
    }
    case Connective::Not:
      return !holds(s, v, w, f.operand());
    case Connective::And:
      return holds(s, v, w, f.lhs()) && holds(s, v, w, f.rhs());
    case Connective::Or:
      return holds(s, v, w, f.lhs()) || holds(s, v, w, f.rhs());
    case Connective::Implies:
      return !holds(s, v, w, f.lhs()) || holds(s, v, w, f.rhs());
    case Connective::Iff:
      return holds(s, v, w, f.lhs()) == holds(s, v, w, f.rhs());
    case Connective::Box:
      for (std::size_t y = 0; y < s.size(); ++y) {
        if (s.distance(w, y) <= f.grade() && !holds(s, v, y, f.operand())) return false;
      }
      return true;
    case Connective::Diamond:
      for (std::size_t y = 0; y < s.size(); ++y) {
        if (s.distance(w, y) <= f.grade() && holds(s, v, y, f.operand())) return true;
      }
      return false;
  }
  return false;
}

inline Val to_val(const umlogic::Valuation& v) {
  Val out;
  for (const auto& [k, s] : v) out[k] = to_set(s);
  return out;
}

/// Validity by enumerating valuations as nested subsets, atom by atom.
inline bool valid(const umlogic::UltrametricSpace& s, const umlogic::Formula& f) {
  const auto names = umlogic::atoms(f);
  const std::vector<std::string> list(names.begin(), names.end());
  const std::size_t n = s.size();
  Val v;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == list.size()) {
      for (std::size_t w = 0; w < n; ++w) {
        if (!holds(s, v, w, f)) return false;
      }
      return true;
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Set set;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask >> b & 1) set.insert(b);
      }
      v[list[i]] = set;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace oracle
