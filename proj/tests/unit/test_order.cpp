#include <doctest.h>

#include <algorithm>
#include <random>

#include "glp/error.hpp"
#include "glp/order.hpp"

using namespace glp;

namespace {

Ordering cmp(const OrderProvider& p, const char* a, const char* b) {
  return compare_modals(p, p.parse(a), p.parse(b));
}

}  // namespace

TEST_CASE("providers compare tokens") {
  CHECK(cmp(*make_provider("omega"), "3", "7") == Ordering::Lt);
  CHECK(cmp(*make_provider("int"), "-5", "10") == Ordering::Lt);
  CHECK(cmp(*make_provider("lexpair:omega,omega"), "(0,9)", "(1,0)") == Ordering::Lt);
  CHECK(cmp(*make_provider("lexpair:omega,omega"), "(1,2)", "(1,0)") == Ordering::Gt);
  CHECK(cmp(*make_provider("finite:3"), "2", "2") == Ordering::Eq);
  CHECK(cmp(*make_provider("omega"), "12345678901234567890", "9") == Ordering::Gt);
}

TEST_CASE("tokens are canonicalised") {
  auto nat = make_provider("omega");
  CHECK(nat->parse("007").token() == "7");
  CHECK(make_provider("int")->parse("-0").token() == "0");
  CHECK(cmp(*nat, "007", "7") == Ordering::Eq);
  CHECK_THROWS_AS(nat->parse("x"), Error);
  CHECK_THROWS_AS(make_provider("finite:2")->parse("2"), Error);
  CHECK_THROWS_AS(nat->parse("-1"), Error);
}

TEST_CASE("modals from another provider are rejected") {
  auto nat = make_provider("omega");
  auto z = make_provider("int");
  try {
    compare_modals(*nat, nat->parse("1"), z->parse("1"));
    FAIL("expected ProviderMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ProviderMismatch);
  }
}

TEST_CASE("least elements") {
  CHECK(make_provider("omega")->least() == "0");
  CHECK(make_provider("finite:4")->least() == "0");
  CHECK_FALSE(make_provider("int")->least().has_value());
  CHECK(make_provider("lexpair:omega,omega")->least() == "(0,0)");
  CHECK_FALSE(make_provider("lexpair:omega,int")->least().has_value());
}

TEST_CASE("provider specs") {
  CHECK(make_provider("nat")->id() == "omega");
  CHECK(make_provider("lexpair:(lexpair:omega,omega),int")->id() ==
        "lexpair:(lexpair:omega,omega),int");
  auto nested = make_provider("lexpair:(lexpair:omega,omega),int");
  CHECK(cmp(*nested, "((0,5),-3)", "((1,0),-9)") == Ordering::Lt);
  CHECK_THROWS_AS(make_provider("reals"), Error);
  CHECK_THROWS_AS(make_provider("finite:x"), Error);
}

TEST_CASE("signature maps") {
  auto nat = make_provider("omega");
  auto sig = signature_of(*nat, {nat->parse("7"), nat->parse("3"), nat->parse("7")});
  REQUIRE(sig.size() == 2);
  CHECK(sig.elements()[0].token() == "3");
  CHECK(sig.index_of(nat->parse("3")) == 0);
  CHECK(sig.index_of(nat->parse("7")) == 1);
  CHECK(signature_of(*nat, {}).empty());

  auto z = make_provider("int");
  auto zs = signature_of(*z, {z->parse("10"), z->parse("-5")});
  CHECK(zs.modal_at(0).token() == "-5");
  CHECK(zs.modal_at(1).token() == "10");
  CHECK_THROWS_AS(zs.modal_at(2), Error);
  CHECK_THROWS_AS(zs.index_of(z->parse("0")), Error);
  CHECK_FALSE(zs.find(z->parse("0")).has_value());
}

TEST_CASE("comparison is a strict linear order on sampled tokens") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-20, 20);
  for (const char* spec : {"int", "lexpair:int,int"}) {
    auto p = make_provider(spec);
    auto token = [&] {
      if (std::string(spec) == "int") return std::to_string(d(rng));
      return "(" + std::to_string(d(rng)) + "," + std::to_string(d(rng)) + ")";
    };
    for (int i = 0; i < 300; ++i) {
      Modal a = p->parse(token()), b = p->parse(token()), c = p->parse(token());
      Ordering ab = p->compare(a, b);
      CHECK(p->compare(b, a) == flip(ab));
      CHECK((ab == Ordering::Eq) == (a == b));
      if (ab == Ordering::Lt && p->compare(b, c) == Ordering::Lt)
        CHECK(p->compare(a, c) == Ordering::Lt);
    }
  }
}

TEST_CASE("signature_of ignores input order") {
  auto z = make_provider("int");
  std::vector<Modal> ms;
  for (int i : {4, -2, 9, 0, -7}) ms.push_back(z->parse(std::to_string(i)));
  auto first = signature_of(*z, ms).elements();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(ms.begin(), ms.end(), rng);
    CHECK(signature_of(*z, ms).elements() == first);
  }
}
