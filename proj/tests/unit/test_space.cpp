#include <doctest.h>

#include "oracle.hpp"
#include "umlogic/dendrogram.hpp"
#include "umlogic/generate.hpp"
#include "umlogic/space.hpp"

using namespace umlogic;

namespace {

UltrametricSpace triangle() {
  const Grade h(1, 2);
  return UltrametricSpace({"a", "b", "c"}, {{0, h, 1}, {h, 0, h}, {1, h, 0}});
}

// Closed balls nest and every member is a centre.
void check_ball_geometry(const UltrametricSpace& s) {
  const auto radii = realized_distances(s);
  for (const auto& eps : radii) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      const PointSet bx = ball(s, x, eps);
      REQUIRE(bx.contains(x));
      for (auto y : bx.members()) CHECK(ball(s, y, eps) == bx);
      for (const auto& gamma : radii) {
        for (std::size_t y = 0; y < s.size(); ++y) {
          const PointSet by = ball(s, y, gamma);
          if (bx.intersects(by)) CHECK((bx.is_subset_of(by) || by.is_subset_of(bx)));
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("cantor distances follow the first-difference formula") {
  const UltrametricSpace c3 = cantor_space(3);
  REQUIRE(c3.size() == 8);
  CHECK(c3.point(0) == "111");
  CHECK(c3.point(7) == "000");
  CHECK(c3.distance(c3.index_of("111"), c3.index_of("110")) == Grade(1, 8));
  CHECK(c3.distance(c3.index_of("111"), c3.index_of("101")) == Grade(1, 4));
  CHECK(c3.distance(c3.index_of("111"), c3.index_of("011")) == Grade(1, 2));
  for (std::size_t depth = 1; depth <= 6; ++depth) {
    const UltrametricSpace c = cantor_space(depth);
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(c.point(i) == cantor_sequence(depth, i));
      for (std::size_t j = 0; j < c.size(); ++j)
        CHECK(c.distance(i, j) == oracle::first_difference(c.point(i), c.point(j)));
    }
  }
  const UltrametricSpace c1 = cantor_space(1);
  CHECK(c1.distance(0, 1) == Grade(1, 2));
  CHECK_THROWS_AS(cantor_space(0), SpaceError);
}

TEST_CASE("world naming of the cantor space") {
  const UltrametricSpace w = cantor_space(3, CantorNaming::Worlds);
  CHECK(w.point(0) == "w0");
  CHECK(w.point(7) == "w7");
  CHECK(w.distance(w.index_of("w0"), w.index_of("w1")) == Grade(1, 8));
  CHECK(w.distance(w.index_of("w0"), w.index_of("w2")) == Grade(1, 4));
  CHECK(w.distance(w.index_of("w0"), w.index_of("w3")) == Grade(1, 4));
  for (int i = 4; i < 8; ++i) CHECK(w.distance(0, i) == Grade(1, 2));
}

TEST_CASE("validate_space examples") {
  CHECK(validate_space(cantor_space(3)).empty());

  const auto v = validate_space(triangle());
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().axiom == Axiom::StrongTriangle);
  CHECK(v.front().witness == std::vector<std::size_t>{0, 2, 1});

  const auto zero = validate_space(UltrametricSpace({"a", "b"}, {{0, 0}, {0, 0}}));
  REQUIRE(zero.size() >= 1);
  CHECK(zero.front().axiom == Axiom::Identity);

  const auto asym = validate_space(UltrametricSpace({"a", "b"}, {{0, Grade(1, 2)}, {Grade(1, 4), 0}}));
  REQUIRE_FALSE(asym.empty());
  CHECK(asym.front().axiom == Axiom::Symmetry);

  const auto self = validate_space(UltrametricSpace({"a"}, {{Grade(1, 2)}}));
  REQUIRE_FALSE(self.empty());
  CHECK(self.front().axiom == Axiom::SelfDistance);

  CHECK_THROWS_AS(UltrametricSpace({"a", "a"}, {{0, 1}, {1, 0}}), SpaceError);
  CHECK_THROWS_AS(UltrametricSpace({"a", "b"}, {{0, 1}}), SpaceError);
}

TEST_CASE("cantor spaces up to depth 10 are ultra-metric") {
  for (std::size_t depth = 1; depth <= 10; ++depth) CHECK_MESSAGE(validate_space(cantor_space(depth)).empty(), depth);
}

TEST_CASE("balls") {
  const UltrametricSpace c3 = cantor_space(3);
  const std::size_t x = c3.index_of("111");
  CHECK(point_names(c3, ball(c3, x, Grade(1, 8))) == std::vector<std::string>{"111", "110"});
  for (std::size_t i = 0; i < c3.size(); ++i) {
    CHECK(ball(c3, i, Grade::zero()).members() == std::vector<std::size_t>{i});
    CHECK(ball(c3, i, Grade::one()).is_full());
    // Against the formula-derived distances.
    for (const auto& eps : {Grade(1, 8), Grade(1, 4), Grade(1, 2)}) {
      oracle::Set expected;
      for (std::size_t j = 0; j < c3.size(); ++j) {
        if (oracle::first_difference(c3.point(i), c3.point(j)) <= eps) expected.insert(j);
      }
      CHECK(oracle::to_set(ball(c3, i, eps)) == expected);
    }
  }
}

TEST_CASE("realized distances") {
  CHECK(realized_distances(cantor_space(3)) == std::vector<Grade>{0, Grade(1, 8), Grade(1, 4), Grade(1, 2)});
  CHECK(realized_distances(UltrametricSpace({"x"}, {{0}})) == std::vector<Grade>{0});
}

TEST_CASE("ball geometry on cantor and random spaces") {
  for (std::size_t depth = 1; depth <= 4; ++depth) check_ball_geometry(cantor_space(depth));
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const UltrametricSpace s = random_ultrametric_space(rng, 1 + i % 9);
    REQUIRE(validate_space(s).empty());
    check_ball_geometry(s);
  }
}

TEST_CASE("closed balls are open balls for radii below the next distance") {
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const UltrametricSpace s = random_ultrametric_space(rng, 2 + i % 7);
    const auto radii = realized_distances(s);
    for (std::size_t r = 0; r + 1 < radii.size(); ++r) {
      const Grade mid{(radii[r].value() + radii[r + 1].value()) / 2};
      for (std::size_t x = 0; x < s.size(); ++x) {
        PointSet open(s.size());
        for (std::size_t y = 0; y < s.size(); ++y) {
          if (s.distance(x, y) < mid) open.insert(y);
        }
        CHECK(open == ball(s, x, radii[r]));
      }
    }
  }
}

TEST_CASE("ball hierarchy") {
  const auto tree = ball_hierarchy(cantor_space(2));
  CHECK(tree.size() == 7);
  CHECK(tree.front().points.is_full());
  CHECK(tree.front().children.size() == 2);
  std::size_t leaves = 0;
  for (const auto& node : tree) {
    if (node.children.empty()) {
      ++leaves;
      CHECK(node.points.count() == 1);
    }
  }
  CHECK(leaves == 4);
  CHECK(ball_hierarchy(UltrametricSpace({"x"}, {{0}})).size() == 1);

  // The worked-example space branches in two at every level.
  const auto c3 = ball_hierarchy(cantor_space(3, CantorNaming::Worlds));
  CHECK(c3.size() == 15);
  for (const auto& node : c3) CHECK((node.children.empty() || node.children.size() == 2));

  const std::string dot = dendrogram_dot(cantor_space(2));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot == dendrogram_dot(cantor_space(2)));
}

TEST_CASE("model valuations must fit the space") {
  auto s = std::make_shared<const UltrametricSpace>(cantor_space(2));
  Model m(s, {{"p", point_set(*s, {"11"})}});
  CHECK(m.atom("p").count() == 1);
  CHECK(m.atom("zzz").empty());
  CHECK_THROWS(Model(s, {{"p", PointSet(3)}}));
  CHECK_THROWS_AS(s->index_of("22"), SpaceError);
}
