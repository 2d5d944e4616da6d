#ifndef HURWITZ_RATFUNC_HH
#define HURWITZ_RATFUNC_HH

// The rational function field F_r(T). Values are kept in canonical form:
// gcd(num, den) = 1, den monic, zero as 0/1. Equality is structural.

#include <string>
#include <string_view>

#include "hurwitz/poly.hh"

namespace hurwitz {

class RatFunc {
public:
  explicit RatFunc(const FieldSpec& spec) : num_(spec), den_(Poly::constant(spec, 1)) {}
  explicit RatFunc(Poly num);

  static RatFunc from_int(const FieldSpec& spec, std::int64_t n);
  static RatFunc from_code(const FieldSpec& spec, Code c);
  static RatFunc one(const FieldSpec& spec) { return from_code(spec, 1); }

  const FieldSpec& spec() const { return num_.spec(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator+(const RatFunc& b) const;
  RatFunc operator-(const RatFunc& b) const;
  RatFunc operator*(const RatFunc& b) const;
  RatFunc operator/(const RatFunc& b) const;
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  RatFunc scaled(Code c) const;
  RatFunc inverse() const;
  RatFunc pow(std::uint64_t k) const;

  bool operator==(const RatFunc& b) const { return num_ == b.num_ && den_ == b.den_; }

  // "num / den", or "num" alone when den = 1.
  std::string to_string() const;
  // Accepts "num / den" or "num"; the result is canonicalised.
  static RatFunc parse(std::string_view text, const FieldSpec& spec);

private:
  friend RatFunc rf_normalize(const Poly& num, const Poly& den);
  struct Canonical {};
  RatFunc(Canonical, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

enum class RatOp { Add, Sub, Mul, Div };

RatFunc rf_arith(const RatFunc& a, const RatFunc& b, RatOp op);

// Divides out gcd(num, den) and makes the denominator monic.
// Throws DivisionByZero when den = 0.
RatFunc rf_normalize(const Poly& num, const Poly& den);

} // namespace hurwitz

#endif // HURWITZ_RATFUNC_HH
