#include "hurwitz/ff.hh"

#include <algorithm>
#include <string>

#include "hurwitz/detail/expr.hh"

namespace hurwitz {
namespace {

// Dense polynomials over F_p in x, ascending coefficients, trimmed.
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP& a)
{
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = std::int64_t(p), new_r = std::int64_t(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error(ErrorKind::DivisionByZero, "residue has no inverse mod " + std::to_string(p));
  return std::uint64_t(t < 0 ? t + std::int64_t(p) : t);
}

PolyP polyp_mod(PolyP a, const PolyP& m, std::uint64_t p)
{
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

PolyP polyp_mulmod(const PolyP& a, const PolyP& b, const PolyP& m, std::uint64_t p)
{
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return polyp_mod(std::move(out), m, p);
}

PolyP polyp_gcd(PolyP a, PolyP b, std::uint64_t p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = polyp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Irreducible iff gcd(m, x^{p^k} - x) = 1 for every k <= deg(m)/2.
bool polyp_irreducible(const PolyP& m, std::uint64_t p)
{
  const std::size_t deg = m.size() - 1;
  PolyP x_power = polyp_mod(PolyP{0, 1}, m, p);
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    // x_power <- x_power^p mod m
    PolyP base = x_power, acc{1};
    for (std::uint64_t n = p; n; n >>= 1) {
      if (n & 1) acc = polyp_mulmod(acc, base, m, p);
      base = polyp_mulmod(base, base, m, p);
    }
    x_power = acc;
    PolyP diff = x_power;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    PolyP g = polyp_gcd(m, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> decode(Code a, std::uint32_t p, int e)
{
  std::vector<std::uint32_t> out(std::size_t(e), 0);
  for (int i = 0; i < e; ++i) {
    out[std::size_t(i)] = a % p;
    a /= p;
  }
  return out;
}

Code encode(std::span<const std::uint32_t> c, std::uint32_t p)
{
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return Code(v);
}

} // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

Code FieldData::ext_add(Code a, Code b) const
{
  auto x = decode(a, p, e), y = decode(b, p, e);
  for (int i = 0; i < e; ++i) x[std::size_t(i)] = std::uint32_t((std::uint64_t(x[std::size_t(i)]) + y[std::size_t(i)]) % p);
  return encode(x, p);
}

Code FieldData::ext_neg(Code a) const
{
  auto x = decode(a, p, e);
  for (auto& c : x) c = c == 0 ? 0 : p - c;
  return encode(x, p);
}

Code FieldData::ext_mul(Code a, Code b) const
{
  auto x = decode(a, p, e), y = decode(b, p, e);
  PolyP px(x.begin(), x.end()), py(y.begin(), y.end()), m(modulus.begin(), modulus.end());
  trim(px);
  trim(py);
  PolyP prod = polyp_mulmod(px, py, m, p);
  std::vector<std::uint32_t> out(std::size_t(e), 0);
  for (std::size_t i = 0; i < prod.size(); ++i) out[i] = std::uint32_t(prod[i]);
  return encode(out, p);
}

Code FieldData::ext_inv(Code a) const
{
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  // Extended Euclid on (modulus, a): track s with s*a = r (mod modulus).
  auto xa = decode(a, p, e);
  PolyP r0(modulus.begin(), modulus.end()), r1(xa.begin(), xa.end());
  trim(r1);
  PolyP s0{}, s1{1};
  while (r1.size() > 1) {
    // q, rem = divmod(r0, r1)
    PolyP rem = r0, q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    const std::uint64_t li = inv_mod(r1.back(), p);
    while (rem.size() >= r1.size()) {
      std::uint64_t c = rem.back() * li % p;
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = (rem[shift + i] + (p - c) * r1[i]) % p;
      trim(rem);
    }
    // s2 = s0 - q*s1
    PolyP qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + q[i] * s1[j]) % p;
    PolyP s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + p - qs[i]) % p;
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t ci = inv_mod(r1[0], p);
  std::vector<std::uint32_t> out(std::size_t(e), 0);
  PolyP s = polyp_mod(s1, PolyP(modulus.begin(), modulus.end()), p);
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = std::uint32_t(s[i] * ci % p);
  return encode(out, p);
}

} // namespace detail

FieldSpec FieldSpec::make(std::uint64_t p, int e, const std::optional<std::vector<std::uint64_t>>& modulus)
{
  if (!is_prime(p))
    throw Error(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
  if (p > (std::uint64_t(1) << 31))
    throw Error(ErrorKind::FieldTooLarge, "characteristic " + std::to_string(p) + " exceeds 2^31");
  if (e < 1) throw Error(ErrorKind::ModulusDegreeMismatch, "extension degree must be >= 1");

  auto d = std::make_shared<detail::FieldData>();
  d->p = std::uint32_t(p);
  d->e = e;
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= p;
    if (r > 0xffffffffu) throw Error(ErrorKind::FieldTooLarge, "field order p^e exceeds 2^32");
  }
  d->r = std::uint64_t(r);

  if (e == 1) {
    if (modulus && !modulus->empty())
      throw Error(ErrorKind::ModulusDegreeMismatch, "a prime field takes no modulus");
    return FieldSpec(std::move(d));
  }
  if (!modulus) throw Error(ErrorKind::ModulusDegreeMismatch, "extension degree " + std::to_string(e) + " needs a modulus");
  PolyP m;
  for (auto c : *modulus) m.push_back(c % p);
  trim(m);
  if (m.size() != std::size_t(e) + 1)
    throw Error(ErrorKind::ModulusDegreeMismatch,
                "modulus degree " + std::to_string(m.empty() ? 0 : m.size() - 1) + " != extension degree " +
                    std::to_string(e));
  if (m.back() != 1) throw Error(ErrorKind::NonMonicModulus, "modulus must be monic");
  if (!polyp_irreducible(m, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  d->modulus.assign(m.begin(), m.end());

  if (d->r <= detail::FieldData::kTableLimit) {
    const std::size_t n = std::size_t(d->r);
    d->add_table.resize(n * n);
    d->mul_table.resize(n * n);
    d->inv_table.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        d->add_table[a * n + b] = d->ext_add(Code(a), Code(b));
        d->mul_table[a * n + b] = d->ext_mul(Code(a), Code(b));
      }
    for (std::size_t a = 1; a < n; ++a) d->inv_table[a] = d->ext_inv(Code(a));
  }
  return FieldSpec(std::move(d));
}

Code FieldSpec::inv(Code a) const
{
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "division by zero in " + describe());
  if (d_->e == 1) return Code(inv_mod(a, d_->p));
  if (!d_->inv_table.empty()) return d_->inv_table[a];
  return d_->ext_inv(a);
}

Code FieldSpec::pow(Code a, std::uint64_t k) const
{
  Code acc = 1;
  for (; k; k >>= 1, a = mul(a, a))
    if (k & 1) acc = mul(acc, a);
  return acc;
}

Code FieldSpec::from_int(std::int64_t n) const
{
  std::int64_t m = n % std::int64_t(d_->p);
  if (m < 0) m += d_->p;
  return Code(m);
}

Code FieldSpec::from_coords(std::span<const std::uint32_t> c) const
{
  std::vector<std::uint32_t> tmp(std::size_t(d_->e), 0);
  for (std::size_t i = 0; i < c.size() && i < tmp.size(); ++i) tmp[i] = c[i] % d_->p;
  return encode(tmp, d_->p);
}

std::vector<std::uint32_t> FieldSpec::coords(Code a) const { return decode(a, d_->p, d_->e); }

bool FieldSpec::operator==(const FieldSpec& other) const
{
  return d_ == other.d_ || (d_->p == other.d_->p && d_->e == other.d_->e && d_->modulus == other.d_->modulus);
}

std::string FieldSpec::describe() const
{
  std::string s = "F_" + std::to_string(d_->r);
  if (d_->e == 1) return s;
  s += " = F_" + std::to_string(d_->p) + "[x]/(";
  bool first = true;
  for (std::size_t i = d_->modulus.size(); i-- > 0;) {
    std::uint32_t c = d_->modulus[i];
    if (c == 0) continue;
    if (!first) s += "+";
    first = false;
    if (i == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s + ")";
}

std::string FieldSpec::format(Code a) const
{
  if (d_->e == 1) return std::to_string(a);
  auto c = coords(a);
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    s += std::to_string(c[i]);
    if (i == 1) s += "*x";
    else if (i > 1) s += "*x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Code FieldSpec::from_generator_poly(std::vector<std::uint64_t> x) const
{
  for (auto& c : x) c %= d_->p;
  if (d_->e > 1) x = polyp_mod(std::move(x), PolyP(d_->modulus.begin(), d_->modulus.end()), d_->p);
  trim(x);
  if (x.size() > std::size_t(d_->e))
    throw Error(ErrorKind::ParseError, "generator term in a prime field");
  std::vector<std::uint32_t> out(std::size_t(d_->e), 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::uint32_t(x[i]);
  return encode(out, d_->p);
}

Code FieldSpec::parse(std::string_view text) const
{
  auto expr = detail::parse_expr(text, d_->p, '\0', d_->e == 1 ? '\0' : 'x');
  std::vector<std::uint64_t> x;
  for (const auto& [key, c] : expr.terms) {
    std::uint64_t deg = key.second;
    if (deg > 4096) throw Error(ErrorKind::ParseError, "generator power too large in \"" + std::string(text) + "\"");
    if (x.size() <= deg) x.resize(deg + 1, 0);
    x[deg] = c;
  }
  return from_generator_poly(std::move(x));
}

void require_same_field(const FieldSpec& a, const FieldSpec& b)
{
  if (!(a == b)) throw Error(ErrorKind::MixedFields, "operands live in " + a.describe() + " and " + b.describe());
}

FieldElement FieldElement::operator+(const FieldElement& b) const
{
  require_same_field(spec_, b.spec_);
  return {spec_, spec_.add(code_, b.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& b) const
{
  require_same_field(spec_, b.spec_);
  return {spec_, spec_.sub(code_, b.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& b) const
{
  require_same_field(spec_, b.spec_);
  return {spec_, spec_.mul(code_, b.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& b) const
{
  require_same_field(spec_, b.spec_);
  return {spec_, spec_.div(code_, b.code_)};
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op)
{
  switch (op) {
  case FieldOp::Add: return a + b;
  case FieldOp::Sub: return a - b;
  case FieldOp::Mul: return a * b;
  case FieldOp::Div: return a / b;
  }
  return a;
}

FieldElement integer_embed(std::int64_t n, const FieldSpec& spec) { return {spec, spec.from_int(n)}; }

FieldElement parse_field_element(std::string_view text, const FieldSpec& spec) { return {spec, spec.parse(text)}; }

} // namespace hurwitz
