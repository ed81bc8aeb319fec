#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "glp/closed.hpp"
#include "glp/error.hpp"
#include "glp/kripke.hpp"

using namespace glp;
using testing::iff;

namespace {

Formula P(const char* text) { return parse(text, *naturals()); }

bool provable(const Formula& f) { return decide(f).provable; }
bool provable(const char* text) { return provable(P(text)); }

WormDNF dnf(std::vector<WormDisjunct> ds) { return WormDNF{std::move(ds)}; }

}  // namespace

TEST_CASE("diamond of a Boolean combination") {
  CHECK(diamond_dnf(0, dnf({{{}, {{0}}}})) == dnf({{{{0}}, {}}}));
  CHECK(diamond_dnf(0, dnf({{{{0}}, {{0}}}})).is_bottom());
  CHECK(diamond_dnf(0, WormDNF::top()) == dnf({{{{0}}, {}}}));
  CHECK(diamond_dnf(1, dnf({{{{0}}, {}}})) == dnf({{{{1}}, {}}}));
  CHECK(diamond_dnf(1, dnf({{{}, {{0}}}})) == dnf({{{{1}}, {{0}}}}));
  CHECK_THROWS_AS(diamond_dnf(2, WormDNF::top(), 2), Error);
  CHECK_THROWS_AS(diamond_dnf(0, dnf({{{{3}}, {}}}), 2), Error);
}

TEST_CASE("Boolean combinations of worms") {
  CHECK(bcw(P("~<0>T")) == dnf({{{}, {{0}}}}));
  CHECK(bcw(P("[1]F")) == dnf({{{}, {{1}}}}));
  CHECK(bcw(P("<0>~<0>T")) == dnf({{{{0}}, {}}}));
  CHECK(bcw(P("T")) == WormDNF::top());
  CHECK(bcw(P("F")).is_bottom());
  try {
    bcw(P("<0>p"));
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosed);
  }
}

TEST_CASE("clausal normal forms") {
  auto c = formula_wnf(P("<1>T -> <0>T"));
  REQUIRE(c.size() == 1);
  CHECK(c[0].antecedent.worm() == NWorm{1});
  REQUIRE(c[0].succedents.size() == 1);
  CHECK(c[0].succedents[0].worm() == NWorm{0});

  CHECK(formula_wnf(P("T")).empty());

  auto d = formula_wnf(P("~(<0>T & <1>T)"));
  REQUIRE(d.size() == 1);
  CHECK(d[0].antecedent == normalize({1, 0}));
  CHECK(d[0].succedents.empty());
}

TEST_CASE("decision examples") {
  CHECK(provable("<0><1>T -> <0>T"));
  CHECK_FALSE(provable("<0>T -> <0><0>T"));
  CHECK(provable("<1>T -> <0><0>T"));
  CHECK(provable("T"));
  CHECK_FALSE(provable("F"));
  CHECK(provable("[0]F -> [0][0]F"));
  CHECK(provable("[1]([1]F -> F) -> [1]F"));
  CHECK_FALSE(provable("<0>T | ~<0>T -> <0>T"));

  Verdict v = decide(P("<0>T -> <0><0>T"));
  CHECK(v.witness == 0u);
  CHECK(decide(P("<1>T")).witness.has_value());
}

TEST_CASE("decision over other orders relabels first") {
  auto z = make_provider("int");
  CHECK(decide(parse("<10>T -> <-5>T", *z), *z).provable);
  CHECK_FALSE(decide(parse("<-5>T -> <10>T", *z), *z).provable);
  auto lp = make_provider("lexpair:omega,omega");
  CHECK(decide(parse("<(1,0)>T -> <(0,7)><(0,7)>T", *lp), *lp).provable);
}

TEST_CASE("consistency") {
  CHECK(is_consistent(P("T")));
  CHECK_FALSE(is_consistent(P("F")));
  CHECK_FALSE(is_consistent(P("<0>T & [0]F")));
  CHECK(is_consistent(P("<1><0>T & ~<2>T")));
}

TEST_CASE("zero diamond worms") {
  CHECK(zero_diamond_worm(P("T")) == NWorm{0});
  CHECK(zero_diamond_worm(P("<0>T | <0><0>T")) == NWorm{0, 0});
  CHECK(zero_diamond_worm(P("<1>T")) == NWorm{0, 1});
  try {
    zero_diamond_worm(P("<0>T & F"));
    FAIL("expected Inconsistent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Inconsistent);
  }
  auto z = make_provider("int");
  CHECK_THROWS_AS(zero_diamond_worm(parse("<3>T", *z), *z), Error);
  auto nat = naturals();
  Worm w = zero_diamond_worm(P("<5>T"), *nat);
  REQUIRE(w.size() == 2);
  CHECK(w.modals[0].token() == "0");
  CHECK(w.modals[1].token() == "5");
}

TEST_CASE("decision is stable under the intermediate representations") {
  testing::Rng rng(21);
  auto modals = testing::natural_modals(3);
  for (int i = 0; i < 200; ++i) {
    Formula f = testing::random_formula(rng, modals, 4);
    bool v = provable(f);
    CHECK(provable(to_formula(bcw(f))) == v);
    CHECK(provable(to_formula(formula_wnf(f))) == v);
    CHECK(provable(iff(f, to_formula(bcw(f)))));
    for (const auto& w : bcw(f).worms())
      for (Level e : w)
        CHECK(std::find_if(modals_of(f).begin(), modals_of(f).end(), [&](const Modal& m) {
                return m.token() == std::to_string(e);
              }) != modals_of(f).end());
  }
}

TEST_CASE("decided formulas agree with the frame oracle") {
  testing::Rng rng(22);
  auto modals = testing::natural_modals(2);
  int refutations = 0;
  for (int i = 0; i < 150; ++i) {
    Formula f = testing::random_formula(rng, modals, 4);
    auto cm = countermodel_search(f, *naturals(), 3);
    if (provable(f)) CHECK_FALSE(cm.has_value());
    if (cm) ++refutations;
  }
  CHECK(refutations > 0);
}

TEST_CASE("strictness of worms over disjunctions") {
  testing::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    NWorm a = testing::random_worm(rng, 3, 4);
    NWorm b1 = testing::random_worm(rng, 3, 4);
    NWorm b2 = testing::random_worm(rng, 3, 4);
    if (worm_entails(a, b1) || worm_entails(a, b2)) continue;
    // All three worms must lie in W_alpha.
    Level floor = std::min({a.min_modal().value_or(2), b1.min_modal().value_or(2),
                            b2.min_modal().value_or(2)});
    for (Level alpha = 0; alpha <= floor; ++alpha) {
      Formula f = Formula::imp(
          Formula::conj(to_formula(a), Formula::disj(to_formula(b1), to_formula(b2))),
          to_formula(a.prefixed(alpha)));
      CHECK(provable(f));
    }
  }
}

TEST_CASE("oversized Boolean combinations hit the resource limit") {
  // A conjunction of 18 two-way disjunctions of distinct worms has 2^18
  // disjuncts.
  Formula f = Formula::top();
  for (Level i = 0; i < 18; ++i)
    f = Formula::conj(f, Formula::disj(to_formula(NWorm{0, i}), to_formula(NWorm{1, i})));
  try {
    bcw(f);
    FAIL("expected ResourceLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}
