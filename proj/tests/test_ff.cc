#include "doctest.h"
#include "support.hh"

using namespace hurwitz;
using hurwitz::testing::field;

TEST_CASE("field construction")
{
  auto f2 = FieldSpec::make(2);
  CHECK(f2.r() == 2);
  CHECK(f2.describe() == "F_2");
  auto f4 = FieldSpec::make(2, 2, std::vector<std::uint64_t>{1, 1, 1});
  CHECK(f4.r() == 4);
  CHECK(f4.describe() == "F_4 = F_2[x]/(x^2+x+1)");
  CHECK(FieldSpec::make(3).r() == 3);
  CHECK(field(9).r() == 9);
  CHECK(field(8).r() == 8);
  CHECK(f4 == field(4));
  CHECK_FALSE(f2 == f4);
}

TEST_CASE("field construction errors")
{
  CHECK_ERROR_KIND(FieldSpec::make(4), ErrorKind::NonPrimeCharacteristic);
  CHECK_ERROR_KIND(FieldSpec::make(1), ErrorKind::NonPrimeCharacteristic);
  CHECK_ERROR_KIND(FieldSpec::make(0), ErrorKind::NonPrimeCharacteristic);
  CHECK_ERROR_KIND(FieldSpec::make(2, 2, std::vector<std::uint64_t>{1, 0, 1}), ErrorKind::ReducibleModulus);
  CHECK_ERROR_KIND(FieldSpec::make(2, 4, std::vector<std::uint64_t>{1, 0, 1, 0, 1}), ErrorKind::ReducibleModulus);
  CHECK_ERROR_KIND(FieldSpec::make(2, 2, std::vector<std::uint64_t>{1, 1, 1, 1}), ErrorKind::ModulusDegreeMismatch);
  CHECK_ERROR_KIND(FieldSpec::make(2, 2), ErrorKind::ModulusDegreeMismatch);
  CHECK_ERROR_KIND(FieldSpec::make(3, 2, std::vector<std::uint64_t>{1, 0, 2}), ErrorKind::NonMonicModulus);
  CHECK_ERROR_KIND(FieldSpec::make(2, 40, std::nullopt), ErrorKind::FieldTooLarge);
  CHECK_ERROR_KIND(FieldSpec::make(4294967311ull), ErrorKind::FieldTooLarge);
}

TEST_CASE("field arithmetic examples")
{
  auto f3 = field(3), f2 = field(2), f4 = field(4);
  CHECK(field_arith(integer_embed(2, f3), integer_embed(2, f3), FieldOp::Mul) == integer_embed(1, f3));
  CHECK(field_arith(integer_embed(1, f2), integer_embed(1, f2), FieldOp::Add).is_zero());
  auto x = parse_field_element("x", f4);
  CHECK((x * x).to_string() == "1+1*x");
  CHECK(x * x == parse_field_element("x+1", f4));
  CHECK(integer_embed(-1, f3).code() == 2);
  CHECK(integer_embed(10, f3).code() == 1);
  CHECK(integer_embed(-1, f2).code() == 1);
  CHECK(integer_embed(7, f4).code() == 1);
  CHECK_ERROR_KIND(field_arith(x, FieldElement(f4, 0), FieldOp::Div), ErrorKind::DivisionByZero);
  CHECK_ERROR_KIND(x + integer_embed(1, f2), ErrorKind::MixedFields);
}

TEST_CASE("field element text round trip")
{
  for (std::uint64_t r : {2, 3, 4, 5, 8, 9}) {
    auto spec = field(r);
    for (Code a = 0; a < r; ++a) {
      auto text = spec.format(a);
      CAPTURE(text);
      CHECK(spec.parse(text) == a);
    }
  }
  CHECK(field(4).format(0) == "0");
  CHECK(field(4).format(2) == "1*x");
  CHECK(field(9).format(5) == "2+1*x");
  CHECK(field(5).format(4) == "4");
  CHECK(field(9).parse("x^2") == field(9).from_int(-1));
  CHECK_ERROR_KIND(field(9).parse("2+*x"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(field(3).parse("x"), ErrorKind::ParseError);
}

TEST_CASE("field axioms on random triples")
{
  const auto s = hurwitz::testing::seed();
  CAPTURE(s);
  hurwitz::testing::Rng rng(s);
  for (std::uint64_t r : {2, 3, 4, 5, 7, 8, 9}) {
    auto spec = field(r);
    CAPTURE(r);
    for (int i = 0; i < 1000; ++i) {
      FieldElement a(spec, hurwitz::testing::random_code(rng, spec));
      FieldElement b(spec, hurwitz::testing::random_code(rng, spec));
      FieldElement c(spec, hurwitz::testing::random_code(rng, spec));
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a - b) + b == a);
      if (!a.is_zero()) REQUIRE((a * a.inverse()).code() == 1);
      if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
  }
}

TEST_CASE("Frobenius fixes every element")
{
  for (std::uint64_t r : {2, 3, 4, 5, 7, 8, 9}) {
    auto spec = field(r);
    for (Code a = 0; a < r; ++a) CHECK(spec.pow(a, r) == a);
  }
}

TEST_CASE("integer embedding is a ring homomorphism")
{
  const auto s = hurwitz::testing::seed();
  CAPTURE(s);
  hurwitz::testing::Rng rng(s);
  std::uniform_int_distribution<std::int64_t> d(-100000, 100000);
  for (std::uint64_t r : {2, 3, 4, 5, 9}) {
    auto spec = field(r);
    for (int i = 0; i < 500; ++i) {
      const std::int64_t m = d(rng), n = d(rng);
      REQUIRE(integer_embed(m + n, spec) == integer_embed(m, spec) + integer_embed(n, spec));
      REQUIRE(integer_embed(m * n, spec) == integer_embed(m, spec) * integer_embed(n, spec));
    }
  }
}

TEST_CASE("larger prime and untabulated extension")
{
  auto big = FieldSpec::make(2147483647);
  Code a = big.from_int(123456789);
  CHECK(big.mul(a, big.inv(a)) == 1);
  CHECK(big.from_int(-1) == 2147483646u);
  // F_{3^7}: above the table limit, arithmetic goes through the polynomial path.
  auto f = FieldSpec::make(3, 7, std::vector<std::uint64_t>{2, 0, 1, 0, 0, 0, 0, 1});
  CHECK(f.r() == 2187);
  hurwitz::testing::Rng rng(hurwitz::testing::seed());
  for (int i = 0; i < 200; ++i) {
    Code x = hurwitz::testing::random_code(rng, f, true);
    CHECK(f.mul(x, f.inv(x)) == 1);
    CHECK(f.pow(x, f.r()) == x);
  }
}
