#ifndef HURWITZ_SERIES_HH
#define HURWITZ_SERIES_HH

// Power series over F_r(T) truncated at an explicit order N: coefficients of
// z^0 .. z^{N-1} are known, everything from z^N on is unknown. Every
// operation states the order of its result; reading past it throws
// OrderUnderflow.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hurwitz/ratfunc.hh"

namespace hurwitz {

class TruncSeries {
public:
  TruncSeries(const FieldSpec& spec, std::size_t order);
  explicit TruncSeries(std::vector<RatFunc> coeffs, const FieldSpec& spec);

  static TruncSeries one(const FieldSpec& spec, std::size_t order);
  // z, truncated at `order`.
  static TruncSeries variable(const FieldSpec& spec, std::size_t order);
  // Absent exponents are zero. Throws ParseError on a repeated exponent and
  // OrderUnderflow on an exponent >= order.
  static TruncSeries from_sparse(const FieldSpec& spec, std::size_t order,
                                 std::span<const std::pair<std::size_t, RatFunc>> terms);

  const FieldSpec& spec() const { return spec_; }
  std::size_t order() const { return c_.size(); }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  const RatFunc& coeff(std::size_t n) const;
  const RatFunc& operator[](std::size_t n) const { return coeff(n); }
  void set(std::size_t n, RatFunc v);

  TruncSeries truncated(std::size_t order) const;

  bool operator==(const TruncSeries& b) const { return c_ == b.c_ && spec_ == b.spec_; }

private:
  FieldSpec spec_;
  std::vector<RatFunc> c_;
};

// Binomial coefficients mod p via Lucas's theorem on base-p digits. Digit
// binomials come from a Pascal table when p is small, otherwise from the
// multiplicative formula.
class BinomTable {
public:
  explicit BinomTable(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t operator()(std::uint64_t n, std::uint64_t m) const;

private:
  std::uint32_t digit_binom(std::uint32_t a, std::uint32_t b) const;

  static constexpr std::uint32_t kPascalLimit = 256;
  std::uint32_t p_;
  std::vector<std::uint32_t> pascal_; // row a, column b at a*(a+1)/2 + b
};

std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t m, std::uint32_t p);

// Order min(a, b).
TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_scale(const TruncSeries& a, const RatFunc& c);

// Multiplicative inverse by g_0 = 1/f_0, g_n = -(1/f_0) sum_{i=1..n} f_i g_{n-i}.
// Throws NonUnitConstantTerm when f_0 = 0.
TruncSeries ts_invert(const TruncSeries& f);

// ell-fold product, same order as f. ell = 0 gives 1.
TruncSeries ts_pow(const TruncSeries& f, std::uint64_t ell);

// f(g(z)) by Horner's scheme, order min(f, g). Throws InnerConstantNonzero
// unless g_0 = 0.
TruncSeries ts_compose(const TruncSeries& f, const TruncSeries& g);

// Hasse-Teichmueller derivative: z^n -> binom(n, m) z^{n-m}. Order f.order - m;
// throws OrderUnderflow when m >= f.order.
TruncSeries ht_derivative(const TruncSeries& f, std::uint64_t m);

// Coefficient of z^e in f^ell by iterated convolution.
RatFunc conv_coeff(const TruncSeries& f, std::uint64_t ell, std::size_t e);
// The first `count` coefficients of f^ell (count <= f.order).
std::vector<RatFunc> conv_coeffs(const TruncSeries& f, std::uint64_t ell, std::size_t count);

} // namespace hurwitz

#endif // HURWITZ_SERIES_HH
