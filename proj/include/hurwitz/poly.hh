#ifndef HURWITZ_POLY_HH
#define HURWITZ_POLY_HH

// Dense univariate polynomials over F_r in the indeterminate T.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/ff.hh"

namespace hurwitz {

// Largest degree a dense polynomial may reach.
inline constexpr std::uint64_t kMaxDenseDegree = std::uint64_t(1) << 26;

// base^exp, throwing ExponentOverflow past 2^62.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

class Poly {
public:
  explicit Poly(FieldSpec spec) : spec_(std::move(spec)) {}
  // Ascending coefficients; trailing zeros are dropped.
  Poly(FieldSpec spec, std::vector<Code> coeffs);

  static Poly constant(const FieldSpec& spec, Code c);
  static Poly monomial(const FieldSpec& spec, Code c, std::uint64_t degree);
  static Poly variable(const FieldSpec& spec) { return monomial(spec, 1, 1); }

  const FieldSpec& spec() const { return spec_; }
  const std::vector<Code>& codes() const { return c_; }
  // -1 for the zero polynomial.
  std::int64_t degree() const { return std::int64_t(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  Code lead() const { return c_.empty() ? 0 : c_.back(); }
  FieldElement coeff(std::size_t i) const { return {spec_, i < c_.size() ? c_[i] : 0}; }

  Poly operator+(const Poly& b) const;
  Poly operator-(const Poly& b) const;
  Poly operator*(const Poly& b) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(Code c) const;
  Poly monic() const;
  Poly pow(std::uint64_t k) const;
  FieldElement evaluate(const FieldElement& x) const;

  bool operator==(const Poly& b) const { return c_ == b.c_ && spec_ == b.spec_; }

  // Descending terms, e.g. "2*T^3+T+1"; "0" for zero. Coefficients use the
  // field element form, parenthesised when they contain '+'.
  std::string to_string() const;
  static Poly parse(std::string_view text, const FieldSpec& spec);

private:
  void normalize();

  FieldSpec spec_;
  std::vector<Code> c_;
};

enum class PolyOp { Add, Sub, Mul };

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

// a = q*b + rem, deg rem < deg b. Throws DivisionByZero when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd. Throws BothZero when a = b = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Quotient of an exact division; the caller guarantees b | a.
Poly poly_exact_div(const Poly& a, const Poly& b);

} // namespace hurwitz

#endif // HURWITZ_POLY_HH
