#ifndef HURWITZ_TESTS_SUPPORT_HH
#define HURWITZ_TESTS_SUPPORT_HH

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "hurwitz/appell.hh"

namespace hurwitz::testing {

// HURWITZ_SEED overrides the default; every property test CAPTUREs it.
inline std::uint64_t seed()
{
  if (const char* s = std::getenv("HURWITZ_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

using Rng = std::mt19937_64;

// F_2, F_3, F_4 = F_2[x]/(x^2+x+1), F_5, F_7, F_8 = F_2[x]/(x^3+x+1), F_9 = F_3[x]/(x^2+1).
inline FieldSpec field(std::uint64_t r)
{
  switch (r) {
  case 4: return FieldSpec::make(2, 2, std::vector<std::uint64_t>{1, 1, 1});
  case 8: return FieldSpec::make(2, 3, std::vector<std::uint64_t>{1, 1, 0, 1});
  case 9: return FieldSpec::make(3, 2, std::vector<std::uint64_t>{1, 0, 1});
  default: return FieldSpec::make(r);
  }
}

inline Code random_code(Rng& rng, const FieldSpec& spec, bool nonzero = false)
{
  std::uniform_int_distribution<std::uint64_t> d(nonzero ? 1 : 0, spec.r() - 1);
  return Code(d(rng));
}

inline Poly random_poly(Rng& rng, const FieldSpec& spec, int max_degree)
{
  std::uniform_int_distribution<int> deg(-1, max_degree);
  const int d = deg(rng);
  std::vector<Code> c(std::size_t(d + 1));
  for (auto& x : c) x = random_code(rng, spec);
  return Poly(spec, std::move(c));
}

inline Poly random_nonzero_poly(Rng& rng, const FieldSpec& spec, int max_degree)
{
  for (;;) {
    Poly p = random_poly(rng, spec, max_degree);
    if (!p.is_zero()) return p;
  }
}

inline RatFunc random_ratfunc(Rng& rng, const FieldSpec& spec, int max_degree = 3)
{
  return rf_normalize(random_poly(rng, spec, max_degree), random_nonzero_poly(rng, spec, max_degree));
}

// Random series; with `unit` the constant term is nonzero. Roughly a third
// of the coefficients are zero so sparse paths get exercised.
inline TruncSeries random_series(Rng& rng, const FieldSpec& spec, std::size_t order, bool unit = false,
                                 int max_degree = 2)
{
  TruncSeries s(spec, order);
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t i = 0; i < order; ++i) {
    if (i == 0 && unit) {
      RatFunc c(spec);
      while (c.is_zero()) c = random_ratfunc(rng, spec, max_degree);
      s.set(0, c);
    } else if (coin(rng) != 0) {
      s.set(i, random_ratfunc(rng, spec, max_degree));
    }
  }
  return s;
}

inline RatFunc rf(const std::string& text, const FieldSpec& spec) { return RatFunc::parse(text, spec); }

} // namespace hurwitz::testing

#define CHECK_ERROR_KIND(expr, k)                                                                                      \
  do {                                                                                                                 \
    try {                                                                                                              \
      (void)(expr);                                                                                                    \
      FAIL_CHECK("expected " << hurwitz::error_name(k));                                                               \
    } catch (const hurwitz::Error& err_) {                                                                             \
      CHECK_MESSAGE(err_.kind() == (k), err_.what());                                                                  \
    }                                                                                                                  \
  } while (0)

#endif // HURWITZ_TESTS_SUPPORT_HH
