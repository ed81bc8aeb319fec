#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "glp/error.hpp"
#include "glp/kripke.hpp"

using namespace glp;

namespace {

Formula P(const char* text) { return parse(text, *naturals()); }

JModel single() { return JModel::make(FrameCandidate{{"x"}, {}}); }

JModel edge() { return JModel::make(FrameCandidate{{"x", "y"}, {{0, {{"x", "y"}}}}}); }

}  // namespace

TEST_CASE("frame validation") {
  CHECK_FALSE(validate_frame(FrameCandidate{{"x"}, {}}).has_value());

  auto v = validate_frame(FrameCandidate{{"x", "y", "z"}, {{1, {{"x", "y"}}}, {0, {{"x", "z"}}}}});
  REQUIRE(v);
  CHECK(v->condition == 2);
  CHECK(v->x == "x");
  CHECK(v->y == "y");
  CHECK(v->z == "z");
  CHECK(v->alpha == 1);
  CHECK(v->beta == 0u);

  auto cyc = validate_frame(FrameCandidate{{"x", "y"}, {{0, {{"x", "y"}, {"y", "x"}}}}});
  REQUIRE(cyc);
  CHECK(cyc->condition == 1);

  auto loop = validate_frame(FrameCandidate{{"x"}, {{0, {{"x", "x"}}}}});
  REQUIRE(loop);
  CHECK(loop->condition == 1);

  CHECK_FALSE(validate_frame(
      FrameCandidate{{"x", "y", "z"}, {{0, {{"z", "x"}, {"z", "y"}}}, {1, {{"x", "y"}}}}}));
  auto bad3 = validate_frame(FrameCandidate{
      {"x", "y", "z", "u"},
      {{0, {{"x", "z"}, {"y", "z"}, {"z", "u"}, {"x", "u"}, {"y", "u"}}}, {1, {{"x", "y"}}}}});
  REQUIRE(bad3);
  CHECK(bad3->condition == 3);

  CHECK_THROWS_AS(validate_frame(FrameCandidate{{"x"}, {{0, {{"x", "q"}}}}}), Error);
  CHECK_THROWS_AS(validate_frame(FrameCandidate{{"x", "x"}, {}}), Error);
  CHECK_THROWS_AS(JModel::make(FrameCandidate{{"x"}, {{0, {{"x", "x"}}}}}), Error);
}

TEST_CASE("model checking") {
  CHECK(model_check(single().widened(5), "x", P("[5]F")));
  CHECK_FALSE(model_check(single(), "x", P("<0>T")));
  CHECK(model_check(edge(), "x", P("<0>T")));
  CHECK_FALSE(model_check(edge(), "y", P("<0>T")));
  CHECK(is_valid_on(single().widened(5), P("[5]F")).valid);
  CHECK(is_valid_on(single(), P("<0>T")).refuting_world == 0u);
  CHECK(is_valid_on(edge(), P("<0>T")).refuting_world == 1u);
  CHECK_THROWS_AS(model_check(single(), "x", P("<3>T")), Error);
  CHECK_THROWS_AS(model_check(single(), "x", P("<0>p")), Error);
}

TEST_CASE("boxes over empty relations are valid") {
  testing::Rng rng(31);
  auto modals = testing::natural_modals(2);
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_frames(n, 1))
      for (Level j = 0; j <= 1; ++j) {
        bool empty = true;
        for (std::size_t i = 0; i < m.size(); ++i) empty = empty && m.successors(j, i) == 0;
        if (!empty) continue;
        Formula f = Formula::box(testing::nat(j), testing::random_formula(rng, modals, 3));
        CHECK(is_valid_on(m, f).valid);
      }
}

TEST_CASE("frame enumeration") {
  CHECK(enumerate_frames(1, 0).size() == 1);
  CHECK(enumerate_frames(0, 3).empty());
  CHECK(enumerate_frames(2, 0).size() == 3);
  CHECK(enumerate_frames(3, 0).size() == 19);
  CHECK(enumerate_frames(4, 0).size() == 219);
  CHECK_THROWS_AS(enumerate_frames(kHardMaxWorlds + 1, 0), Error);
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_frames(n, 2)) CHECK_FALSE(validate_frame(m.frame()));
  // Each enumerated frame is distinct.
  auto all = enumerate_frames(3, 1);
  std::set<std::string> seen;
  for (const auto& m : all) seen.insert(to_json(m));
  CHECK(seen.size() == all.size());
}

TEST_CASE("countermodel search") {
  auto cm = countermodel_search(P("<0>T -> <0><0>T"), *naturals());
  REQUIRE(cm);
  CHECK(to_json(cm->model) == R"({"worlds":["x","y"],"relations":{"0":[["x","y"]]}})");
  CHECK(cm->model.worlds()[cm->world] == "x");

  CHECK_FALSE(countermodel_search(P("<0><1>T -> <0>T"), *naturals()));

  auto f = countermodel_search(P("F"), *naturals());
  REQUIRE(f);
  CHECK(f->model.size() == 1);

  CHECK_FALSE(countermodel_search(P("<1>T -> <0><0>T"), *naturals(), 4));
  CHECK_THROWS_AS(countermodel_search(P("p"), *naturals()), Error);
  CHECK_THROWS_AS(countermodel_search(P("T"), *naturals(), 7), Error);
}

TEST_CASE("model files") {
  const std::string text = R"({"worlds":["x","y"],"relations":{"0":[["x","y"]]}})";
  JModel m = model_from_json(text);
  CHECK(to_json(m) == text);
  CHECK(m.related(0, 0, 1));
  CHECK(to_json(model_from_json(R"({"worlds":["a"]})")) == R"({"worlds":["a"],"relations":{}})");

  JModel wide = model_from_json(
      R"({"worlds":["a","b","c"],"relations":{"10":[["a","b"]],"2":[["c","a"],["c","b"]]}})");
  CHECK(to_json(wide) ==
        R"({"worlds":["a","b","c"],"relations":{"2":[["c","a"],["c","b"]],"10":[["a","b"]]}})");
  CHECK(wide.max_index() == 10);

  for (const char* bad : {"", "[]", R"({"worlds":[1]})", R"({"worlds":["x"],"relations":{"a":[]}})",
                          R"({"worlds":["x"],"relations":{"0":[["x"]]}})"}) {
    try {
      model_from_json(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
  try {
    model_from_json(R"({"worlds":["x","y"],"relations":{"0":[["x","y"],["y","x"]]}})");
    FAIL("accepted a cycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FrameViolation);
  }
}
