#include <doctest.h>

#include "oracle.hpp"
#include "umlogic/generate.hpp"
#include "umlogic/semantics.hpp"
#include "umlogic/validity.hpp"

using namespace umlogic;

namespace {

Bindings bind(std::initializer_list<std::pair<const char*, const char*>> formulas,
              std::initializer_list<std::pair<const char*, const char*>> grades) {
  Bindings b;
  for (auto [k, v] : formulas) b.formulas.emplace(k, parse(v));
  for (auto [k, v] : grades) b.grades.emplace(k, Grade::parse(v));
  return b;
}

std::vector<std::string> names_of(const std::vector<AxiomMatch>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.name);
  return out;
}

}  // namespace

TEST_CASE("valid_in_model examples") {
  const UltrametricSpace c3 = cantor_space(3, CantorNaming::Worlds);
  CHECK(valid_in_model(c3, parse("[1/4]p -> p")).valid);
  CHECK(valid_in_model(c3, parse("p | ~p")).valid);

  const auto r = valid_in_model(c3, parse("p -> [1/4]p"));
  CHECK_FALSE(r.valid);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->world == c3.index_of("w0"));
  CHECK(point_names(c3, r.counterexample->valuation.at("p")) == std::vector<std::string>{"w0"});

  const UltrametricSpace bits = cantor_space(3);
  const auto rb = valid_in_model(bits, parse("p -> [1/4]p"));
  REQUIRE(rb.counterexample);
  CHECK(bits.point(rb.counterexample->world) == "111");
}

TEST_CASE("validity agrees with direct enumeration") {
  Rng rng(31);
  FormulaShape shape;
  shape.max_depth = 3;
  for (int m = 0; m < 12; ++m) {
    const UltrametricSpace s = random_ultrametric_space(rng, 1 + m % 4);
    shape.grades = realized_distances(s);
    shape.grades.push_back(Grade::one());
    for (int k = 0; k < 25; ++k) {
      const Formula f = random_formula(rng, shape);
      CHECK_MESSAGE(valid_in_model(s, f).valid == oracle::valid(s, f), print(f));
    }
  }
}

TEST_CASE("counterexamples do not depend on the thread count") {
  const UltrametricSpace c3 = cantor_space(3);
  for (const char* text : {"p -> [1/4]p", "[1/8](p | q) -> [1/8]p | [1/8]q", "<1/2>p -> q"}) {
    ValidityOptions one, many;
    many.threads = 4;
    const auto a = valid_in_model(c3, parse(text), one);
    const auto b = valid_in_model(c3, parse(text), many);
    REQUIRE(a.counterexample);
    REQUIRE(b.counterexample);
    CHECK(a.counterexample->world == b.counterexample->world);
    CHECK(a.counterexample->valuation == b.counterexample->valuation);
    // The witness really falsifies the formula.
    CHECK_FALSE(holds(Model(std::make_shared<const UltrametricSpace>(c3), a.counterexample->valuation),
                      a.counterexample->world, parse(text)));
  }
}

TEST_CASE("enumeration cap") {
  ValidityOptions opts;
  opts.max_valuations = 100;
  CHECK_THROWS_AS(valid_in_model(cantor_space(3), parse("p -> q"), opts), EnumerationCapExceeded);
  CHECK_FALSE(valid_in_model(cantor_space(2), parse("[1]p | ~p"), opts).valid);
}

TEST_CASE("match_axiom examples") {
  const auto t = match_axiom(parse("[1/2]p -> p"));
  CHECK(names_of(t) == std::vector<std::string>{"T"});
  CHECK(has_match(t, "T", bind({{"phi", "p"}}, {{"eps", "1/2"}})));

  const auto ti = match_axiom(parse("[1/2][1/4]p <-> [1/2]p"));
  CHECK(names_of(ti) == std::vector<std::string>{"TI"});
  CHECK(has_match(ti, "TI", bind({{"phi", "p"}}, {{"gamma", "1/2"}, {"delta", "1/4"}})));

  CHECK(match_axiom(parse("[1/4]p -> [1/2]p")).empty());
  CHECK(has_match(match_axiom(parse("[1/2]p -> [1/4]p")), "UM3", bind({{"phi", "p"}}, {{"gamma", "1/2"}, {"delta", "1/4"}})));
  CHECK(match_axiom(parse("[1/2][1/4]p <-> [1/4]p")).empty());
  CHECK(match_axiom(parse("p & q")).empty());
}

TEST_CASE("matching sees through diamonds and single directions") {
  CHECK(has_match(match_axiom(parse("[1/2]p -> ~[1/2]~p")), "UM1", bind({{"phi", "p"}}, {{"eps", "1/2"}})));
  CHECK(has_match(match_axiom(parse("[1/2]p -> <1/2>p")), "UM1", bind({{"phi", "p"}}, {{"eps", "1/2"}})));
  CHECK(has_match(match_axiom(parse("<1/4>q <-> ~[1/4]~q")), "D", bind({{"phi", "q"}}, {{"eps", "1/4"}})));
  CHECK(has_match(match_axiom(parse("<1/4>q -> ~[1/4]~q")), "D-ltr", bind({{"phi", "q"}}, {{"eps", "1/4"}})));
  CHECK(has_match(match_axiom(parse("~[1/4]~q -> <1/4>q")), "D-rtl", bind({{"phi", "q"}}, {{"eps", "1/4"}})));
  CHECK(has_match(match_axiom(parse("[1/2][1/4]p -> [1/2]p")), "TI-ltr",
                  bind({{"phi", "p"}}, {{"gamma", "1/2"}, {"delta", "1/4"}})));
  CHECK(has_match(match_axiom(parse("[1/8]p -> [0][1/8]p")), "TI-rtl",
                  bind({{"phi", "p"}}, {{"gamma", "0"}, {"delta", "1/8"}})));
  CHECK(has_match(match_axiom(parse("[1](p -> q) -> [1]p -> [1]q")), "K",
                  bind({{"phi", "p"}, {"psi", "q"}}, {{"eps", "1"}})));
  CHECK(has_match(match_axiom(parse("<1/2>p -> [1/2]<1/2>p")), "UM2", bind({{"phi", "p"}}, {{"eps", "1/2"}})));
  CHECK(has_match(match_axiom(parse("p -> [1/8]<1/8>p")), "UM4", bind({{"phi", "p"}}, {{"eps", "1/8"}})));
}

TEST_CASE("instantiate_axiom examples") {
  CHECK(instantiate_axiom("T", bind({{"phi", "q"}}, {{"eps", "1"}})) == parse("[1]q -> q"));
  CHECK(instantiate_axiom("UM4", bind({{"phi", "p"}}, {{"eps", "1/8"}})) == parse("p -> [1/8]<1/8>p"));
  CHECK(instantiate_axiom("UM3", bind({{"phi", "p & q"}}, {{"gamma", "1/4"}, {"delta", "1/8"}})) ==
        parse("[1/4](p&q) -> [1/8](p&q)"));
  CHECK(print(instantiate_axiom("UM3", bind({{"phi", "p & q"}}, {{"gamma", "1/4"}, {"delta", "1/8"}}))) ==
        "[1/4](p & q) -> [1/8](p & q)");
  CHECK_THROWS_AS(instantiate_axiom("UM3", bind({{"phi", "p"}}, {{"gamma", "1/8"}, {"delta", "1/4"}})), AxiomError);
  CHECK_THROWS_AS(
      instantiate_axiom("TI", bind({{"phi", "p"}}, {{"gamma", "1/8"}, {"delta", "1/4"}, {"eps", "1/8"}})), AxiomError);
  CHECK_THROWS_AS(instantiate_axiom("K", bind({{"phi", "p"}}, {{"eps", "1"}})), AxiomError);
  CHECK_THROWS_AS(instantiate_axiom("S5", bind({{"phi", "p"}}, {{"eps", "1"}})), AxiomError);
}

TEST_CASE("instances match their own schema") {
  Rng rng(32);
  FormulaShape shape;
  shape.max_depth = 2;
  shape.grades = {Grade::zero(), Grade(1, 8), Grade(1, 4), Grade(1, 2), Grade::one()};
  for (auto schema : all_schemas()) {
    for (int i = 0; i < 50; ++i) {
      const Bindings b = random_bindings(rng, schema, shape);
      const Formula f = instantiate_axiom(schema_name(schema), b);
      const auto ms = match_axiom(f);
      Bindings reported = b;
      if (schema == Schema::TI) reported.grades.erase("eps");
      CHECK_MESSAGE(has_match(ms, schema_name(schema), reported), print(f));
      CHECK(match_axiom(parse(print(f))).size() == ms.size());
    }
  }
}

TEST_CASE("axioms are sound on small spaces") {
  Rng rng(33);
  FormulaShape shape;
  shape.max_depth = 1;
  for (int m = 0; m < 6; ++m) {
    const UltrametricSpace s = random_ultrametric_space(rng, 1 + m % 5);
    shape.grades = realized_distances(s);
    shape.grades.push_back(Grade::one());
    for (auto schema : all_schemas()) {
      for (int i = 0; i < 10; ++i) {
        const Formula f = instantiate_axiom(schema_name(schema), random_bindings(rng, schema, shape));
        CHECK_MESSAGE(valid_in_model(s, f).valid, print(f));
      }
    }
  }
}

TEST_CASE("TI fails on the non-ultra triangle") {
  const Grade h(1, 2);
  const UltrametricSpace tri({"a", "b", "c"}, {{0, h, 1}, {h, 0, h}, {1, h, 0}});
  const auto r = valid_in_model(tri, instantiate_axiom("TI", bind({{"phi", "p"}}, {{"gamma", "1/2"}, {"delta", "1/2"}})));
  CHECK_FALSE(r.valid);
  CHECK(r.counterexample);
  CHECK_FALSE(oracle::valid(tri, parse("[1/2]p -> [1/2][1/2]p")));
}

TEST_CASE("schema names") {
  for (auto s : all_schemas()) CHECK(schema_from_name(schema_name(s)) == s);
  CHECK_FALSE(schema_from_name("S4"));
  CHECK(all_schemas().size() == 8);
}
