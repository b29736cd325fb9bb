#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "kv/errors.hpp"
#include "kv/ratfunc.hpp"

using namespace kv;
using kvtest::Rng;

namespace {
const VarListPtr XY = make_variables({"x", "y"});
const VarListPtr XYZ = make_variables({"x", "y", "z"});

RatFunc e(const std::string& s) { return kvtest::rf(s, XY); }
}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).den() > 0);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational::from_string("6/4").to_string() == "3/2");
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("field arithmetic examples") {
  CHECK(rf_eq(e("x") + e("y"), e("x+y")));
  CHECK((e("x") + e("y")).den().is_constant());

  RatFunc h = e("(x^2+y^2)/2");
  CHECK(rf_eq(h * e("2"), e("x^2+y^2")));

  RatFunc q = e("x^2-y^2") / e("x-y");
  CHECK(rf_eq(q, e("x+y")));
}

TEST_CASE("exact equality is representation independent") {
  CHECK(rf_eq(RatFunc(kvtest::rf("x^2-y^2", XY).num(), kvtest::rf("x-y", XY).num()), e("x+y")));
  RatFunc zero_odd(MultiPoly(XY), kvtest::rf("x^2+1", XY).num());
  CHECK(rf_eq(zero_odd, RatFunc::zero(XY)));
  CHECK_FALSE(rf_eq(e("x") / e("y"), e("y") / e("x")));
}

TEST_CASE("partial derivatives") {
  CHECK(rf_eq(e("(x^2+y^2)/2").partial("x"), e("x")));
  CHECK(rf_eq(e("y^2").partial("x"), RatFunc::zero(XY)));
  CHECK(rf_eq(e("1/x").partial("x"), e("-1/x^2")));
  CHECK_THROWS_AS(e("x").partial("q"), UnknownVariable);
}

TEST_CASE("division errors") {
  CHECK_THROWS_AS(e("x") / RatFunc::zero(XY), DivisionByZero);
  CHECK_THROWS_AS(RatFunc(kvtest::rf("x", XY).num(), MultiPoly(XY)), DivisionByZero);
}

TEST_CASE("field axioms on randomized triples") {
  Rng rng(20240801);
  for (int iter = 0; iter < 60; ++iter) {
    RatFunc a = kvtest::random_ratfunc(rng, XYZ);
    RatFunc b = kvtest::random_ratfunc(rng, XYZ);
    RatFunc c = kvtest::random_ratfunc(rng, XYZ);
    CHECK(rf_eq((a + b) + c, a + (b + c)));
    CHECK(rf_eq(a + b, b + a));
    CHECK(rf_eq((a * b) * c, a * (b * c)));
    CHECK(rf_eq(a * b, b * a));
    CHECK(rf_eq(a * (b + c), a * b + a * c));
    CHECK(rf_eq(a - a, RatFunc::zero(XYZ)));
    CHECK(rf_eq(a + RatFunc::zero(XYZ), a));
    CHECK(rf_eq(a * RatFunc::one(XYZ), a));
    if (!a.is_zero()) {
      CHECK(rf_eq(a * (RatFunc::one(XYZ) / a), RatFunc::one(XYZ)));
      CHECK(rf_eq((b / a) * a, b));
    }
  }
}

TEST_CASE("Leibniz rule and commuting partials") {
  Rng rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    RatFunc a = kvtest::random_ratfunc(rng, XY);
    RatFunc b = kvtest::random_ratfunc(rng, XY);
    for (std::size_t v = 0; v < 2; ++v)
      CHECK(rf_eq((a * b).partial(v), a.partial(v) * b + a * b.partial(v)));
    CHECK(rf_eq(a.partial(0).partial(1), a.partial(1).partial(0)));
  }
}

TEST_CASE("rf_eq is an equivalence relation") {
  Rng rng(99);
  for (int iter = 0; iter < 40; ++iter) {
    RatFunc a = kvtest::random_ratfunc(rng, XY);
    // Same value under two other representations.
    MultiPoly p = kvtest::random_poly(rng, XY, 2, 2, /*nonzero=*/true);
    MultiPoly q = kvtest::random_poly(rng, XY, 2, 2, /*nonzero=*/true);
    RatFunc b(a.num() * p, a.den() * p);
    RatFunc c(a.num() * q, a.den() * q);
    CHECK(rf_eq(a, a));
    CHECK(rf_eq(a, b));
    CHECK(rf_eq(b, a));
    CHECK(rf_eq(b, c));
    CHECK(rf_eq(a, c));
  }
}

TEST_CASE("pow and scaling") {
  CHECK(rf_eq(e("x+y").pow(2), e("x^2+2*x*y+y^2")));
  CHECK(rf_eq(e("x/y").pow(3), e("x^3/y^3")));
  CHECK(rf_eq(e("x").pow(0), RatFunc::one(XY)));
}

TEST_CASE("empty variable list models constants") {
  VarListPtr none = make_variables({});
  RatFunc half = RatFunc::constant(none, Rational(1, 2));
  CHECK(rf_eq(half + half, RatFunc::one(none)));
  CHECK_THROWS_AS(half.partial("x"), UnknownVariable);
}
