#include "umlogic/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace umlogic {

namespace {

std::size_t combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::shared_ptr<const detail::FormulaNode> make_node(Connective kind, std::string name, Grade grade,
                                                     std::vector<Formula> children) {
  auto node = std::make_shared<detail::FormulaNode>();
  node->kind = kind;
  node->name = std::move(name);
  node->grade = std::move(grade);
  node->children = std::move(children);
  std::size_t h = static_cast<std::size_t>(kind) * 1315423911u;
  if (kind == Connective::Atom) h = combine(h, std::hash<std::string>{}(node->name));
  if (kind == Connective::Box || kind == Connective::Diamond) h = combine(h, node->grade.hash());
  for (const auto& c : node->children) h = combine(h, c.hash());
  node->hash = h;
  return node;
}

int precedence(Connective k) {
  switch (k) {
    case Connective::Iff: return 0;
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    default: return 4;
  }
}

void print_into(const Formula& f, std::string& out);

void print_child(const Formula& f, int min_prec, std::string& out) {
  if (precedence(f.kind()) < min_prec) {
    out += '(';
    print_into(f, out);
    out += ')';
  } else {
    print_into(f, out);
  }
}

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out += f.name();
      return;
    case Connective::Not:
      out += '~';
      print_child(f.operand(), 4, out);
      return;
    case Connective::Box:
      out += '[' + f.grade().str() + ']';
      print_child(f.operand(), 4, out);
      return;
    case Connective::Diamond:
      out += '<' + f.grade().str() + '>';
      print_child(f.operand(), 4, out);
      return;
    case Connective::And:
      print_child(f.lhs(), 3, out);
      out += " & ";
      print_child(f.rhs(), 4, out);
      return;
    case Connective::Or:
      print_child(f.lhs(), 2, out);
      out += " | ";
      print_child(f.rhs(), 3, out);
      return;
    case Connective::Implies:
      print_child(f.lhs(), 2, out);
      out += " -> ";
      print_child(f.rhs(), 1, out);
      return;
    case Connective::Iff:
      print_child(f.lhs(), 1, out);
      out += " <-> ";
      print_child(f.rhs(), 1, out);
      return;
  }
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be non-empty");
  return Formula{make_node(Connective::Atom, std::move(name), Grade{}, {})};
}
Formula Formula::negation(Formula operand) {
  return Formula{make_node(Connective::Not, {}, Grade{}, {std::move(operand)})};
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula{make_node(Connective::And, {}, Grade{}, {std::move(lhs), std::move(rhs)})};
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula{make_node(Connective::Or, {}, Grade{}, {std::move(lhs), std::move(rhs)})};
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula{make_node(Connective::Implies, {}, Grade{}, {std::move(lhs), std::move(rhs)})};
}
Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula{make_node(Connective::Iff, {}, Grade{}, {std::move(lhs), std::move(rhs)})};
}
Formula Formula::box(Grade grade, Formula operand) {
  return Formula{make_node(Connective::Box, {}, std::move(grade), {std::move(operand)})};
}
Formula Formula::diamond(Grade grade, Formula operand) {
  return Formula{make_node(Connective::Diamond, {}, std::move(grade), {std::move(operand)})};
}

Connective Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Grade& Formula::grade() const { return node_->grade; }
const Formula& Formula::operand() const { return node_->children.at(0); }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }
std::size_t Formula::hash() const { return node_->hash; }

bool Formula::is_binary() const {
  switch (kind()) {
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
    case Connective::Iff:
      return true;
    default:
      return false;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  if (a.node_->name != b.node_->name || a.node_->grade != b.node_->grade) return false;
  return a.node_->children == b.node_->children;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.name() != b.name()) return a.name() < b.name();
  if (a.grade() != b.grade()) return a.grade() < b.grade();
  return std::lexicographical_compare(a.node_->children.begin(), a.node_->children.end(),
                                      b.node_->children.begin(), b.node_->children.end());
}

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

Formula desugar(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      return f;
    case Connective::Not:
      return Formula::negation(desugar(f.operand()));
    case Connective::And:
      return Formula::conjunction(desugar(f.lhs()), desugar(f.rhs()));
    case Connective::Box:
      return Formula::box(f.grade(), desugar(f.operand()));
    case Connective::Or:
      return Formula::negation(Formula::conjunction(Formula::negation(desugar(f.lhs())),
                                                    Formula::negation(desugar(f.rhs()))));
    case Connective::Implies:
      return Formula::negation(Formula::conjunction(desugar(f.lhs()), Formula::negation(desugar(f.rhs()))));
    case Connective::Iff: {
      auto a = desugar(f.lhs());
      auto b = desugar(f.rhs());
      return Formula::conjunction(Formula::negation(Formula::conjunction(a, Formula::negation(b))),
                                  Formula::negation(Formula::conjunction(b, Formula::negation(a))));
    }
    case Connective::Diamond:
      return Formula::negation(Formula::box(f.grade(), Formula::negation(desugar(f.operand()))));
  }
  return f;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> order;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> visit = [&](const Formula& g) {
    if (seen.contains(g)) return;
    switch (g.kind()) {
      case Connective::Atom:
        break;
      case Connective::Not:
      case Connective::Box:
      case Connective::Diamond:
        visit(g.operand());
        break;
      default:
        visit(g.lhs());
        visit(g.rhs());
        break;
    }
    seen.insert(g);
    order.push_back(g);
  };
  visit(f);
  return order;
}

std::set<Grade> grade_set(const Formula& f) {
  std::set<Grade> grades;
  for (const auto& g : subformulas(f)) {
    if (g.is_modal()) grades.insert(g.grade());
  }
  return grades;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> names;
  for (const auto& g : subformulas(f)) {
    if (g.kind() == Connective::Atom) names.insert(g.name());
  }
  return names;
}

std::size_t depth(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      return 0;
    case Connective::Not:
    case Connective::Box:
    case Connective::Diamond:
      return 1 + depth(f.operand());
    default:
      return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
  }
}

std::size_t modal_depth(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      return 0;
    case Connective::Not:
      return modal_depth(f.operand());
    case Connective::Box:
    case Connective::Diamond:
      return 1 + modal_depth(f.operand());
    default:
      return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
  }
}

}  // namespace umlogic
