#include "doctest.h"
#include "support.hh"

using namespace hurwitz;
using hurwitz::testing::field;
using hurwitz::testing::rf;

namespace {
Poly P(const std::string& s, const FieldSpec& f) { return Poly::parse(s, f); }
} // namespace

TEST_CASE("brackets, D and L")
{
  auto f3 = field(3), f2 = field(2);
  CarlitzContext c3(f3, 3), c2(f2, 3);
  CHECK(c3.bracket(1) == P("T^3+2*T", f3));
  CHECK(c2.bracket(1) == P("T^2+T", f2));
  CHECK(c2.bracket(2) == P("T^4+T", f2));
  CHECK(c3.D(0).is_one());
  CHECK(c3.D(1) == P("T^3+2*T", f3));
  CHECK(c2.D(2) == P("(T^4+T)*(T^2+T)^2", f2));
  CHECK(c2.D(2).to_string() == "T^8+T^6+T^5+T^3");
  CHECK(c3.L(0).is_one());
  CHECK(c3.L(1) == P("T^3+2*T", f3));
  CHECK(c2.L(2) == P("(T^4+T)*(T^2+T)", f2));
  CHECK_THROWS_AS(c3.bracket(0), Error);
}

TEST_CASE("recurrences match literal bracket products")
{
  for (std::uint64_t r : {2, 3, 4, 5}) {
    auto f = field(r);
    CarlitzContext ctx(f, 4);
    Poly d = Poly::constant(f, 1), l = Poly::constant(f, 1);
    for (std::uint64_t i = 1; i <= 3; ++i) {
      // D_i = prod_{k=0}^{i-1} [i-k]^{r^k}
      Poly lit = Poly::constant(f, 1);
      for (std::uint64_t k = 0; k < i; ++k) lit *= ctx.bracket(i - k).pow(checked_pow(r, k));
      CHECK(ctx.D(i) == lit);
      l *= ctx.bracket(i);
      CHECK(ctx.L(i) == l);
    }
    // Beyond the cache the values are computed on demand.
    CarlitzContext small(f, 1);
    CHECK(small.D(3) == ctx.D(3));
    CHECK(small.L(3) == ctx.L(3));
  }
}

TEST_CASE("r-ary digits and Carlitz factorial")
{
  CHECK(rdigits(5, 3) == std::vector<std::uint64_t>{2, 1});
  CHECK(rdigits(0, 7).empty());
  CHECK(rdigits(8, 2) == std::vector<std::uint64_t>{0, 0, 0, 1});
  auto f3 = field(3);
  CarlitzContext c3(f3, 3);
  CHECK(c3.factorial(0).is_one());
  CHECK(c3.factorial(2).is_one());
  CHECK(c3.factorial(5) == P("T^3+2*T", f3));
  CHECK(c3.factorial(7) == c3.D(1).pow(2));
  for (std::uint64_t r : {2, 3, 4, 5}) {
    CarlitzContext ctx(field(r), 3);
    for (std::uint64_t j = 0; j <= 3; ++j) CHECK(ctx.factorial(checked_pow(r, j)) == ctx.D(j));
  }
}

TEST_CASE("exponential and logarithm coefficients")
{
  auto f3 = field(3), f2 = field(2);
  CarlitzContext c3(f3, 2), c2(f2, 3);
  auto e3 = c3.exp_series(10);
  CHECK(e3[0].is_zero());
  CHECK(e3[1].is_one());
  CHECK(e3[2].is_zero());
  CHECK(e3[3] == rf("1/(T^3+2*T)", f3));
  CHECK(e3[9] == RatFunc(c3.D(2)).inverse());
  auto l3 = c3.log_series(10);
  CHECK(l3[1].is_one());
  CHECK(l3[3] == rf("2/(T^3+2*T)", f3));
  CHECK(l3[9] == RatFunc(c3.L(2)).inverse());
  auto l2 = c2.log_series(5);
  CHECK(l2[2] == rf("1/(T^2+T)", f2));
  for (std::size_t n : {4u, 5u, 6u, 7u, 8u}) CHECK(e3[n].is_zero());
}

TEST_CASE("lambda series")
{
  auto f3 = field(3);
  CarlitzContext c3(f3, 2);
  auto bc = c3.lambda_series(Family::BernoulliCarlitz, 9);
  auto cc = c3.lambda_series(Family::CauchyCarlitz, 9);
  CHECK(bc[0].is_one());
  CHECK(cc[0].is_one());
  CHECK(bc[2] == rf("1/(T^3+2*T)", f3));
  CHECK(cc[2] == rf("2/(T^3+2*T)", f3));
  CHECK(bc[8] == RatFunc(c3.D(2)).inverse());
  CHECK_ERROR_KIND(c3.lambda_series(Family::Custom, 5), ErrorKind::NormalizationError);
  for (std::uint64_t r : {2, 3, 4, 5, 9}) {
    auto ctx = CarlitzContext::for_order(field(r), 40);
    for (Family fam : {Family::BernoulliCarlitz, Family::CauchyCarlitz}) {
      auto lam = ctx.lambda_series(fam, 40);
      for (std::uint64_t e = 0; e < 40; ++e) {
        bool power = false;
        for (std::uint64_t q = 1; q <= e + 1; q *= r) power |= q == e + 1;
        CAPTURE(e);
        CHECK(lam[e].is_zero() == !power);
      }
    }
  }
}

TEST_CASE("exponential and logarithm are inverse under composition")
{
  for (std::uint64_t r : {2, 3, 4, 5}) {
    CAPTURE(r);
    auto ctx = CarlitzContext::for_order(field(r), 10);
    auto e = ctx.exp_series(10), l = ctx.log_series(10);
    auto z = TruncSeries::variable(field(r), 10);
    CHECK(ts_compose(l, e) == z);
    CHECK(ts_compose(e, l) == z);
  }
}
