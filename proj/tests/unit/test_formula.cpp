#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "umlogic/formula.hpp"
#include "umlogic/generate.hpp"

using namespace umlogic;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }

bool core_only(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      return true;
    case Connective::Not:
    case Connective::Box:
      return core_only(f.operand());
    case Connective::And:
      return core_only(f.lhs()) && core_only(f.rhs());
    default:
      return false;
  }
}

}  // namespace

TEST_CASE("grades are exact rationals") {
  CHECK(Grade::parse("0.125") == Grade(1, 8));
  CHECK(Grade::parse("1/8") == Grade(1, 8));
  CHECK(Grade::parse("2/16") == Grade(1, 8));
  CHECK(Grade::parse(".5") == Grade(1, 2));
  CHECK(Grade::parse("1") == Grade::one());
  CHECK(Grade(2, 4).str() == "1/2");
  CHECK(Grade(1, 3) < Grade(1, 2));
  CHECK(max(Grade(1, 4), Grade(1, 2)) == Grade(1, 2));
  CHECK_THROWS_AS(Grade::parse("-1/2"), GradeError);
  CHECK_THROWS_AS(Grade::parse("1/0"), GradeError);
  CHECK_THROWS_AS(Grade::parse("abc"), GradeError);
}

TEST_CASE("grade order agrees with cross multiplication") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(0, 1000), den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    CHECK((Grade(a, b) <= Grade(c, d)) == (a * d <= c * b));
    CHECK((Grade(a, b) == Grade(c, d)) == (a * d == c * b));
  }
  // Adjacent fractions that a double would round together.
  CHECK(Grade(Rational(1, 3)) != Grade(Rational(333333333333333333LL, 1000000000000000000LL)));
}

TEST_CASE("parse examples") {
  CHECK(parse("p") == p());
  CHECK(parse("[1/8]p & [1/4]q") == Formula::conjunction(Formula::box(Grade(1, 8), p()), Formula::box(Grade(1, 4), q())));
  const Formula f = parse("<0.5>~p -> q");
  CHECK(f == Formula::implication(Formula::diamond(Grade(1, 2), Formula::negation(p())), q()));
  CHECK(print(f) == "<1/2>~p -> q");
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("p | q & p") == Formula::disjunction(p(), Formula::conjunction(q(), p())));
  CHECK(parse("p -> q -> p") == Formula::implication(p(), Formula::implication(q(), p())));
  CHECK(parse("(p -> q) -> p") == Formula::implication(Formula::implication(p(), q()), p()));
  CHECK(parse("~[1]p") == Formula::negation(Formula::box(Grade::one(), p())));
  CHECK(parse("[1/2][1/4]p <-> [1/2]p").kind() == Connective::Iff);
  CHECK(parse("p & q & p") == Formula::conjunction(Formula::conjunction(p(), q()), p()));
  CHECK(parse("  p\n&\tq ") == Formula::conjunction(p(), q()));
}

TEST_CASE("print examples") {
  CHECK(print(Formula::box(Grade(1, 8), p())) == "[1/8]p");
  CHECK(print(Formula::diamond(Grade::one(), q())) == "<1>q");
  CHECK(print(Formula::negation(Formula::conjunction(p(), q()))) == "~(p & q)");
  CHECK(print(parse("(p -> q) -> p")) == "(p -> q) -> p");
  CHECK(print(parse("[0.25](p | q)")) == "[1/4](p | q)");
}

TEST_CASE("parse errors carry position and expectations") {
  try {
    parse("p &\n  & q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("[1/2 p"), ParseError);
  CHECK_THROWS_AS(parse("[3/2]p"), ParseError);
  CHECK_THROWS_AS(parse("[2]p"), ParseError);
  CHECK_THROWS_AS(parse("[-1]p"), ParseError);
  CHECK_THROWS_AS(parse("p <-> q <-> p"), ParseError);
}

TEST_CASE("desugar examples") {
  const Grade e(1, 4);
  CHECK(desugar(Formula::diamond(e, p())) == Formula::negation(Formula::box(e, Formula::negation(p()))));
  CHECK(desugar(Formula::disjunction(p(), q())) ==
        Formula::negation(Formula::conjunction(Formula::negation(p()), Formula::negation(q()))));
  CHECK(desugar(Formula::box(e, p())) == Formula::box(e, p()));
  CHECK(desugar(Formula::implication(p(), q())) == Formula::negation(Formula::conjunction(p(), Formula::negation(q()))));
}

TEST_CASE("subformulas list children before parents") {
  CHECK(subformulas(p()) == std::vector<Formula>{p()});
  const Formula pq = Formula::conjunction(p(), q());
  const Formula b = Formula::box(Grade(1, 2), pq);
  CHECK(subformulas(b) == std::vector<Formula>{p(), q(), pq, b});
  const Formula np = Formula::negation(p());
  CHECK(subformulas(Formula::negation(np)) == std::vector<Formula>{p(), np, Formula::negation(np)});
  CHECK(subformulas(Formula::conjunction(p(), p())).size() == 2);
}

TEST_CASE("grade sets") {
  CHECK(grade_set(parse("[1/8]p & [1/4]q")) == std::set<Grade>{Grade(1, 8), Grade(1, 4)});
  CHECK(grade_set(parse("p & q")).empty());
  CHECK(grade_set(parse("[0][1]p")) == std::set<Grade>{Grade::zero(), Grade::one()});
  CHECK(atoms(parse("[1]p -> q | r")) == std::set<std::string>{"p", "q", "r"});
  CHECK(modal_depth(parse("[1]<1/2>p & [0]q")) == 2);
}

TEST_CASE("print and parse round-trip on generated formulas") {
  Rng rng(11);
  FormulaShape shape;
  shape.atoms = {"p", "q", "r1"};
  shape.grades = {Grade::zero(), Grade(1, 8), Grade(1, 3), Grade(1, 2), Grade::one()};
  shape.max_depth = 5;
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, shape);
    const std::string text = print(f);
    CHECK_MESSAGE(parse(text) == f, text);
  }
}

TEST_CASE("desugar yields core connectives and preserves truth") {
  Rng rng(12);
  FormulaShape shape;
  shape.max_depth = 4;
  for (int m = 0; m < 30; ++m) {
    const UltrametricSpace s = random_ultrametric_space(rng, 1 + m % 6);
    shape.grades = realized_distances(s);
    shape.grades.push_back(Grade::one());
    const oracle::Val v = oracle::to_val(random_valuation(rng, s.size(), shape.atoms));
    for (int k = 0; k < 40; ++k) {
      const Formula f = random_formula(rng, shape);
      const Formula d = desugar(f);
      REQUIRE(core_only(d));
      for (std::size_t w = 0; w < s.size(); ++w) CHECK(oracle::holds(s, v, w, f) == oracle::holds(s, v, w, d));
    }
  }
}

TEST_CASE("enumerated formulas are distinct and within depth") {
  const auto all = enumerate_formulas({"p"}, {Grade::zero(), Grade::one()}, 2);
  std::set<Formula> seen(all.begin(), all.end());
  CHECK(seen.size() == all.size());
  // depth 0: p; depth 1: ~p, p&p, [0]p, [1]p
  CHECK(enumerate_formulas({"p"}, {Grade::zero(), Grade::one()}, 1).size() == 5);
  for (const auto& f : all) CHECK(depth(f) <= 2);
}
