#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "umlogic/grade.hpp"

namespace umlogic {

/// Atom, Not, And and Box are the core connectives. The remaining kinds are
/// surface sugar kept in the tree so that printing round-trips; evaluation
/// always goes through desugar().
enum class Connective { Atom, Not, And, Or, Implies, Iff, Box, Diamond };

namespace detail {
struct FormulaNode;
}

/// Immutable, structurally shared formula tree. Copies are cheap.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula box(Grade grade, Formula operand);
  static Formula diamond(Grade grade, Formula operand);

  Connective kind() const;
  /// Atom name; empty for non-atoms.
  const std::string& name() const;
  /// Modal grade; zero for non-modal nodes.
  const Grade& grade() const;
  /// Sole child of Not/Box/Diamond.
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_modal() const { return kind() == Connective::Box || kind() == Connective::Diamond; }
  bool is_binary() const;

  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  /// Total structural order, used for canonical containers.
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

namespace detail {
struct FormulaNode {
  Connective kind;
  std::string name;
  Grade grade;
  std::vector<Formula> children;
  std::size_t hash;
};
}  // namespace detail

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column, std::vector<std::string> expected);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Parses the concrete syntax:
///
///   formula := imp [ "<->" imp ]
///   imp     := or [ "->" imp ]
///   or      := and { "|" and }
///   and     := unary { "&" unary }
///   unary   := "~" unary | "[" grade "]" unary | "<" grade ">" unary
///            | identifier | "(" formula ")"
///
/// Grades are decimals with a finite expansion or int/int, and must lie in
/// [0,1].
Formula parse(std::string_view text);

/// Canonical text with minimal parentheses; parse(print(f)) == f.
std::string print(const Formula& f);

/// Rewrites Or, Implies, Iff and Diamond into Atom/Not/And/Box.
Formula desugar(const Formula& f);

/// Every distinct subterm once, children before parents.
std::vector<Formula> subformulas(const Formula& f);

std::set<Grade> grade_set(const Formula& f);
std::set<std::string> atoms(const Formula& f);

/// Nesting depth of connectives; atoms have depth 0.
std::size_t depth(const Formula& f);
/// Number of modalities on the longest root-to-leaf path.
std::size_t modal_depth(const Formula& f);

}  // namespace umlogic
