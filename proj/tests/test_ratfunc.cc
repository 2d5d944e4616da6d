#include "doctest.h"
#include "support.hh"

using namespace hurwitz;
using hurwitz::testing::field;
using hurwitz::testing::rf;

TEST_CASE("rational function examples")
{
  auto f3 = field(3), f2 = field(2);
  CHECK(rf_arith(rf("1/(T^3+2*T)", f3), rf("T^3+2*T", f3), RatOp::Mul).is_one());
  auto a = rf("(T+1)/(T^2+2)", f3);
  CHECK(a + RatFunc(f3) == a);
  CHECK((rf("1/(T^2+T)", f2) + rf("1/(T^2+T)", f2)).is_zero());
  auto n = rf_normalize(Poly::parse("2*T", f3), Poly::parse("2*T^2", f3));
  CHECK(n.to_string() == "1 / T");
  auto z = rf_normalize(Poly(f3), Poly::parse("T^5", f3));
  CHECK(z.is_zero());
  CHECK(z.den().is_one());
  CHECK(z.to_string() == "0");
  auto m = rf_normalize(Poly::parse("-1", f3), Poly::parse("T^3-T", f3));
  CHECK(m.to_string() == "2 / T^3+2*T");
  CHECK_ERROR_KIND(rf_normalize(Poly::parse("1", f3), Poly(f3)), ErrorKind::DivisionByZero);
  CHECK_ERROR_KIND(rf_arith(a, RatFunc(f3), RatOp::Div), ErrorKind::DivisionByZero);
  CHECK_ERROR_KIND(RatFunc(f3).inverse(), ErrorKind::DivisionByZero);
  CHECK_ERROR_KIND(a + rf("1", f2), ErrorKind::MixedFields);
}

TEST_CASE("rational function text form")
{
  auto f3 = field(3);
  CHECK(rf("2 / T^3+2*T", f3) == rf("2/(T^3+2*T)", f3));
  CHECK(rf("(T^2-1)/(T-1)", f3).to_string() == "T+1");
  CHECK(rf("T^2/(2*T)", f3).to_string() == "2*T");
  CHECK(rf("1 / T^3+2*T", f3).to_string() == "1 / T^3+2*T");
  CHECK_ERROR_KIND(rf("1/0", f3), ErrorKind::DivisionByZero);
  CHECK_ERROR_KIND(rf("1/", f3), ErrorKind::ParseError);
  CHECK_ERROR_KIND(rf("1/T/T", f3), ErrorKind::ParseError);
}

TEST_CASE("field axioms and normal form on random fractions")
{
  const auto s = hurwitz::testing::seed();
  CAPTURE(s);
  hurwitz::testing::Rng rng(s);
  for (std::uint64_t r : {2, 3, 4, 5}) {
    auto f = field(r);
    CAPTURE(r);
    for (int i = 0; i < 200; ++i) {
      RatFunc a = hurwitz::testing::random_ratfunc(rng, f, 4);
      RatFunc b = hurwitz::testing::random_ratfunc(rng, f, 4);
      RatFunc c = hurwitz::testing::random_ratfunc(rng, f, 4);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - b + b == a);
      if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
      if (!b.is_zero()) REQUIRE(a / b * b == a);
      REQUIRE(a.den().lead() == 1);
      REQUIRE(poly_gcd(a.num().is_zero() ? a.den() : a.num(), a.den()).is_one());
      // Same value built from a scaled representative.
      Poly k = hurwitz::testing::random_nonzero_poly(rng, f, 3);
      RatFunc same = rf_normalize(a.num() * k, a.den() * k);
      REQUIRE(same == a);
      REQUIRE(rf_normalize(same.num(), same.den()) == same);
      REQUIRE(RatFunc::parse(a.to_string(), f) == a);
      REQUIRE(a.pow(3) == a * a * a);
    }
  }
}
