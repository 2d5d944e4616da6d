#include "doctest.h"
#include "support.hh"

#include <functional>

#include "hurwitz/ht_rules.hh"

using namespace hurwitz;
using hurwitz::testing::field;
using hurwitz::testing::rf;

namespace {

TruncSeries ser(const FieldSpec& f, std::size_t order, std::vector<std::pair<std::size_t, std::string>> terms)
{
  std::vector<std::pair<std::size_t, RatFunc>> t;
  for (auto& [e, s] : terms) t.emplace_back(e, rf(s, f));
  return TruncSeries::from_sparse(f, order, t);
}

// Every entry of a against b up to the smaller order.
bool agree(const TruncSeries& a, const TruncSeries& b)
{
  const std::size_t n = std::min(a.order(), b.order());
  return a.truncated(n) == b.truncated(n);
}

} // namespace

TEST_CASE("series addition and multiplication")
{
  auto f3 = field(3), f2 = field(2);
  auto a = ser(f3, 4, {{0, "1"}, {1, "T"}, {3, "1/T"}});
  CHECK(ts_add(a, TruncSeries(f3, 3)) == a.truncated(3));
  CHECK(ts_add(a, a).order() == 4);
  auto a2 = ser(f2, 5, {{0, "1"}, {2, "T"}});
  CHECK(ts_add(a2, a2) == TruncSeries(f2, 5));
  CHECK(ts_add(ser(f3, 3, {{0, "1"}, {1, "1"}}), ser(f3, 3, {{0, "1"}, {2, "1"}})) ==
        ser(f3, 3, {{0, "2"}, {1, "1"}, {2, "1"}}));
  CHECK(ts_mul(a, TruncSeries::one(f3, 4)) == a);
  CHECK(ts_mul(ser(f3, 3, {{0, "1"}, {1, "1"}}), ser(f3, 3, {{0, "1"}, {1, "-1"}})) ==
        ser(f3, 3, {{0, "1"}, {2, "-1"}}));
  auto sq = ts_mul(ser(f3, 5, {{0, "1"}, {2, "1/(T^3+2*T)"}}), ser(f3, 5, {{0, "1"}, {2, "1/(T^3+2*T)"}}));
  CHECK(sq == ser(f3, 5, {{0, "1"}, {2, "2/(T^3+2*T)"}, {4, "1/(T^3+2*T)^2"}}));
  CHECK(ts_mul(a, ser(f3, 2, {{0, "1"}})).order() == 2);
  CHECK_ERROR_KIND(ts_add(a, TruncSeries(f2, 4)), ErrorKind::MixedFields);
}

TEST_CASE("series construction errors")
{
  auto f3 = field(3);
  CHECK_ERROR_KIND(ser(f3, 3, {{1, "1"}, {1, "2"}}), ErrorKind::ParseError);
  CHECK_ERROR_KIND(ser(f3, 3, {{3, "1"}}), ErrorKind::OrderUnderflow);
  CHECK_ERROR_KIND(TruncSeries(f3, 3).coeff(3), ErrorKind::OrderUnderflow);
}

TEST_CASE("series inversion")
{
  auto f3 = field(3);
  CHECK(ts_invert(TruncSeries::one(f3, 6)) == TruncSeries::one(f3, 6));
  auto f = ser(f3, 8, {{0, "1"}, {2, "1/(T^3+2*T)"}});
  auto g = ts_invert(f);
  CHECK(g[2] == rf("2/(T^3+2*T)", f3));
  CHECK(g[1].is_zero());
  CHECK_ERROR_KIND(ts_invert(ser(f3, 4, {{1, "1"}})), ErrorKind::NonUnitConstantTerm);

  const auto s = hurwitz::testing::seed();
  CAPTURE(s);
  hurwitz::testing::Rng rng(s);
  for (std::uint64_t r : {2, 3, 4, 5}) {
    auto fs = field(r);
    for (int i = 0; i < 30; ++i) {
      auto u = hurwitz::testing::random_series(rng, fs, 7, true);
      auto v = ts_invert(u);
      REQUIRE(ts_mul(u, v) == TruncSeries::one(fs, 7));
      REQUIRE(ts_invert(v) == u);
    }
  }
}

TEST_CASE("series powers")
{
  auto f2 = field(2), f3 = field(3);
  auto f = ser(f3, 5, {{0, "T"}, {1, "1/T"}, {4, "1"}});
  CHECK(ts_pow(f, 1) == f);
  CHECK(ts_pow(TruncSeries::one(f3, 5), 3) == TruncSeries::one(f3, 5));
  CHECK(ts_pow(ser(f2, 4, {{0, "1"}, {1, "1"}}), 2) == ser(f2, 4, {{0, "1"}, {2, "1"}}));
  CHECK(ts_pow(f, 3) == ts_mul(ts_mul(f, f), f));
  CHECK(ts_pow(f, 0) == TruncSeries::one(f3, 5));
}

TEST_CASE("series composition")
{
  auto f3 = field(3);
  auto f = ser(f3, 6, {{0, "1"}, {1, "T"}, {3, "1/T"}, {5, "T^2"}});
  auto z = TruncSeries::variable(f3, 6);
  auto g = ser(f3, 6, {{1, "1"}, {2, "T+1"}, {4, "1/T"}});
  CHECK(ts_compose(f, z) == f);
  CHECK(ts_compose(z, g) == g);
  // (1 + z)(z + z^2) substituted literally.
  auto h = ts_compose(ser(f3, 6, {{0, "1"}, {1, "1"}}), g);
  CHECK(h == ts_add(TruncSeries::one(f3, 6), g));
  auto sq = ts_compose(ser(f3, 6, {{2, "1"}}), g);
  CHECK(sq == ts_mul(g, g));
  CHECK_ERROR_KIND(ts_compose(f, f), ErrorKind::InnerConstantNonzero);
}

TEST_CASE("binomials mod p")
{
  CHECK(binom_mod_p(5, 2, 3) == 1);
  CHECK(binom_mod_p(5, 2, 2) == 0);
  CHECK(binom_mod_p(17, 0, 5) == 1);
  CHECK(binom_mod_p(3, 5, 7) == 0);
  CHECK(binom_mod_p(1000003, 1, 1000003) == 0);
  CHECK(binom_mod_p(1000004, 1, 1000003) == 1);
  // Against Pascal's triangle, for every small prime and n < 60.
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    std::vector<std::vector<std::uint32_t>> pas(60);
    for (std::size_t n = 0; n < 60; ++n) {
      pas[n].assign(n + 1, 1);
      for (std::size_t k = 1; k < n; ++k) pas[n][k] = (pas[n - 1][k - 1] + pas[n - 1][k]) % p;
      for (std::size_t k = 0; k <= n; ++k) REQUIRE(binom_mod_p(n, k, p) == pas[n][k] % p);
    }
  }
  // Large prime: digit binomials without a Pascal table.
  CHECK(binom_mod_p(300, 2, 257) == (300ull * 299 / 2) % 257);
  CHECK(BinomTable(1009)(2000, 3) == std::uint32_t((2000ull * 1999 * 1998 / 6) % 1009));
}

TEST_CASE("Hasse-Teichmueller derivative")
{
  auto f3 = field(3), f2 = field(2);
  auto f = ser(f3, 6, {{0, "1"}, {2, "T"}, {5, "1/T"}});
  CHECK(ht_derivative(f, 0) == f);
  CHECK(ht_derivative(ser(f3, 6, {{5, "1"}}), 2) == ser(f3, 4, {{3, "1"}}));
  CHECK(ht_derivative(ser(f2, 6, {{5, "1"}}), 2) == TruncSeries(f2, 4));
  CHECK(ht_derivative(f, 5).order() == 1);
  CHECK_ERROR_KIND(ht_derivative(f, 6), ErrorKind::OrderUnderflow);
}

TEST_CASE("Hasse-Teichmueller composition law")
{
  const auto s = hurwitz::testing::seed();
  CAPTURE(s);
  hurwitz::testing::Rng rng(s);
  for (std::uint64_t r : {2, 3, 4, 5}) {
    auto fs = field(r);
    const std::uint32_t p = fs.p();
    for (int i = 0; i < 20; ++i) {
      auto f = hurwitz::testing::random_series(rng, fs, 16);
      for (std::uint64_t n = 0; n <= 6; ++n)
        for (std::uint64_t m = 0; n + m < 16; ++m) {
          auto lhs = ht_derivative(ht_derivative(f, n), m);
          auto rhs = ts_scale(ht_derivative(f, m + n), RatFunc::from_int(fs, binom_mod_p(m + n, n, p)));
          REQUIRE(lhs == rhs);
        }
    }
  }
}

TEST_CASE("convolution coefficients against brute force")
{
  auto f3 = field(3);
  auto lam = ser(f3, 9, {{0, "1"}, {2, "1/(T^3+2*T)"}, {8, "1/(T^9+2*T)"}});
  CHECK(conv_coeff(lam, 2, 2) == rf("2/(T^3+2*T)", f3));
  const auto s = hurwitz::testing::seed();
  CAPTURE(s);
  hurwitz::testing::Rng rng(s);
  for (std::uint64_t r : {2, 3, 4}) {
    auto fs = field(r);
    auto f = hurwitz::testing::random_series(rng, fs, 9, true);
    for (std::size_t e = 0; e < 9; ++e) {
      CHECK(conv_coeff(f, 1, e) == f[e]);
    }
    CHECK(conv_coeff(f, 3, 0) == f[0].pow(3));
    for (std::uint64_t ell = 1; ell <= 3; ++ell) {
      auto cs = conv_coeffs(f, ell, 9);
      for (std::size_t e = 0; e <= 8; ++e) {
        RatFunc brute(fs);
        std::vector<std::size_t> idx(ell, 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
          if (k + 1 == ell) {
            RatFunc prod = f[left];
            for (std::size_t t = 0; t + 1 < ell; ++t) prod *= f[idx[t]];
            brute += prod;
            return;
          }
          for (std::size_t i = 0; i <= left; ++i) {
            idx[k] = i;
            rec(k + 1, left - i);
          }
        };
        rec(0, e);
        REQUIRE(cs[e] == brute);
        REQUIRE(conv_coeff(f, ell, e) == brute);
      }
    }
  }
}

TEST_CASE("Hasse-Teichmueller product, quotient and power rules")
{
  const auto s = hurwitz::testing::seed();
  CAPTURE(s);
  hurwitz::testing::Rng rng(s);
  std::uniform_int_distribution<int> kd(1, 4);
  for (std::uint64_t r : {2, 3, 4, 5}) {
    auto fs = field(r);
    CAPTURE(r);
    for (int i = 0; i < 12; ++i) {
      const std::size_t order = 10;
      std::vector<TruncSeries> fac;
      const int k = kd(rng);
      for (int j = 0; j < k; ++j) fac.push_back(hurwitz::testing::random_series(rng, fs, order, false, 1));
      TruncSeries prod = fac[0];
      for (int j = 1; j < k; ++j) prod = ts_mul(prod, fac[std::size_t(j)]);
      auto u = hurwitz::testing::random_series(rng, fs, order, true, 1);
      auto inv = ts_invert(u);
      for (std::uint64_t m = 1; m <= 8; ++m) {
        CAPTURE(m);
        REQUIRE(agree(ht_derivative(prod, m), ht_product_rule(fac, m)));
        auto d = ht_derivative(inv, m);
        REQUIRE(agree(d, ht_quotient_rule(u, m)));
        REQUIRE(agree(d, ht_quotient_rule_binomial(u, m)));
        if (m <= 6)
          for (std::uint64_t j : {2, 3, 4}) REQUIRE(agree(ht_derivative(ts_pow(fac[0], j), m), ht_power_rule(fac[0], j, m)));
      }
    }
  }
}
