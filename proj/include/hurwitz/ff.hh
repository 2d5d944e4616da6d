#ifndef HURWITZ_FF_HH
#define HURWITZ_FF_HH

// Finite fields F_r, r = p^e. An element is stored as a single integer code
// sum_i c_i p^i over its coordinates c_i in the power basis of the generator x.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/error.hh"

namespace hurwitz {

using Code = std::uint32_t;

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  int e = 1;
  std::uint64_t r = 0;
  std::vector<std::uint32_t> modulus; // ascending, monic, size e+1; empty when e == 1
  // Full operation tables for small extension fields (r <= kTableLimit).
  std::vector<Code> add_table;
  std::vector<Code> mul_table;
  std::vector<Code> inv_table;

  static constexpr std::uint64_t kTableLimit = 256;

  Code ext_add(Code a, Code b) const;
  Code ext_neg(Code a) const;
  Code ext_mul(Code a, Code b) const;
  Code ext_inv(Code a) const;
};

} // namespace detail

class FieldSpec {
public:
  // Validates p (prime, <= 2^31), e >= 1 and, for e >= 2, the modulus
  // (ascending coefficients over F_p, monic, degree e, irreducible).
  static FieldSpec make(std::uint64_t p, int e = 1,
                        const std::optional<std::vector<std::uint64_t>>& modulus = std::nullopt);

  std::uint32_t p() const { return d_->p; }
  int e() const { return d_->e; }
  std::uint64_t r() const { return d_->r; }
  bool is_prime_field() const { return d_->e == 1; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  Code zero() const { return 0; }
  Code one() const { return 1; }

  Code add(Code a, Code b) const
  {
    if (d_->e == 1) {
      std::uint64_t s = std::uint64_t(a) + b;
      return Code(s >= d_->p ? s - d_->p : s);
    }
    if (!d_->add_table.empty()) return d_->add_table[std::size_t(a) * d_->r + b];
    return d_->ext_add(a, b);
  }
  Code neg(Code a) const
  {
    if (d_->e == 1) return a == 0 ? 0 : d_->p - a;
    return d_->ext_neg(a);
  }
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code mul(Code a, Code b) const
  {
    if (d_->e == 1) return Code(std::uint64_t(a) * b % d_->p);
    if (!d_->mul_table.empty()) return d_->mul_table[std::size_t(a) * d_->r + b];
    return d_->ext_mul(a, b);
  }
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t k) const;

  // n mod p, placed in the prime subfield.
  Code from_int(std::int64_t n) const;
  Code from_coords(std::span<const std::uint32_t> coords) const;
  // Reduces a polynomial in the generator (ascending coefficients mod p)
  // modulo the field modulus.
  Code from_generator_poly(std::vector<std::uint64_t> coeffs) const;
  std::vector<std::uint32_t> coords(Code a) const;

  // Structural equality: same p, e and modulus.
  bool operator==(const FieldSpec& other) const;

  // "F_3" or "F_4 = F_2[x]/(x^2+x+1)".
  std::string describe() const;

  // Element text form; see format_field_code / parse_field_code.
  std::string format(Code a) const;
  Code parse(std::string_view text) const;

private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

// Throws MixedFields unless a == b.
void require_same_field(const FieldSpec& a, const FieldSpec& b);

bool is_prime(std::uint64_t n);

class FieldElement {
public:
  FieldElement(FieldSpec spec, Code code) : spec_(std::move(spec)), code_(code) {}

  const FieldSpec& spec() const { return spec_; }
  Code code() const { return code_; }
  std::vector<std::uint32_t> coords() const { return spec_.coords(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement operator-() const { return {spec_, spec_.neg(code_)}; }
  FieldElement inverse() const { return {spec_, spec_.inv(code_)}; }

  bool operator==(const FieldElement& b) const { return code_ == b.code_ && spec_ == b.spec_; }

  std::string to_string() const { return spec_.format(code_); }

private:
  FieldSpec spec_;
  Code code_;
};

enum class FieldOp { Add, Sub, Mul, Div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);

FieldElement integer_embed(std::int64_t n, const FieldSpec& spec);

FieldElement parse_field_element(std::string_view text, const FieldSpec& spec);

} // namespace hurwitz

#endif // HURWITZ_FF_HH
