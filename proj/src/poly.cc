#include "hurwitz/poly.hh"

#include <algorithm>

#include "hurwitz/detail/expr.hh"

namespace hurwitz {
namespace {

void check_degree(std::uint64_t degree)
{
  if (degree > kMaxDenseDegree)
    throw Error(ErrorKind::ExponentOverflow, "polynomial degree " + std::to_string(degree) + " exceeds the dense limit");
}

} // namespace

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp)
{
  constexpr std::uint64_t limit = std::uint64_t(1) << 62;
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > limit / base)
      throw Error(ErrorKind::ExponentOverflow,
                  std::to_string(base) + "^" + std::to_string(exp) + " exceeds 2^62");
    out *= base;
  }
  return out;
}

Poly::Poly(FieldSpec spec, std::vector<Code> coeffs) : spec_(std::move(spec)), c_(std::move(coeffs)) { normalize(); }

void Poly::normalize()
{
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldSpec& spec, Code c) { return Poly(spec, {c}); }

Poly Poly::monomial(const FieldSpec& spec, Code c, std::uint64_t degree)
{
  if (c == 0) return Poly(spec);
  check_degree(degree);
  std::vector<Code> v(degree + 1, 0);
  v[degree] = c;
  return Poly(spec, std::move(v));
}

Poly Poly::operator+(const Poly& b) const
{
  require_same_field(spec_, b.spec_);
  const auto& big = c_.size() >= b.c_.size() ? c_ : b.c_;
  const auto& small = c_.size() >= b.c_.size() ? b.c_ : c_;
  std::vector<Code> out(big);
  for (std::size_t i = 0; i < small.size(); ++i) out[i] = spec_.add(out[i], small[i]);
  return Poly(spec_, std::move(out));
}

Poly Poly::operator-() const
{
  std::vector<Code> out(c_);
  for (auto& c : out) c = spec_.neg(c);
  return Poly(spec_, std::move(out));
}

Poly Poly::operator-(const Poly& b) const { return *this + (-b); }

Poly Poly::operator*(const Poly& b) const
{
  require_same_field(spec_, b.spec_);
  if (c_.empty() || b.c_.empty()) return Poly(spec_);
  check_degree(std::uint64_t(degree() + b.degree()));
  const std::size_t n = c_.size() + b.c_.size() - 1;
  std::vector<Code> out(n, 0);
  if (spec_.is_prime_field()) {
    const std::uint64_t p = spec_.p();
    if (p < (1u << 16)) {
      // Products are below 2^32, so sums of fewer than 2^32 of them fit.
      std::vector<std::uint64_t> acc(n, 0);
      for (std::size_t i = 0; i < c_.size(); ++i) {
        const std::uint64_t a = c_[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a * b.c_[j];
      }
      for (std::size_t k = 0; k < n; ++k) out[k] = Code(acc[k] % p);
    } else {
      for (std::size_t i = 0; i < c_.size(); ++i) {
        const std::uint64_t a = c_[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = Code((out[i + j] + a * b.c_[j] % p) % p);
      }
    }
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = spec_.add(out[i + j], spec_.mul(c_[i], b.c_[j]));
    }
  }
  return Poly(spec_, std::move(out));
}

Poly Poly::scaled(Code c) const
{
  if (c == 0) return Poly(spec_);
  std::vector<Code> out(c_);
  for (auto& x : out) x = spec_.mul(x, c);
  return Poly(spec_, std::move(out));
}

Poly Poly::monic() const
{
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled(spec_.inv(c_.back()));
}

Poly Poly::pow(std::uint64_t k) const
{
  if (k == 0) return constant(spec_, 1);
  if (c_.empty()) return *this;
  // f^q = sum c_i^q T^{iq} when q is a power of p.
  std::uint64_t q = k;
  while (q % spec_.p() == 0) q /= spec_.p();
  if (q == 1) {
    check_degree(std::uint64_t(degree()) * k);
    std::vector<Code> out(std::size_t(degree()) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = spec_.pow(c_[i], k);
    return Poly(spec_, std::move(out));
  }
  Poly acc = constant(spec_, 1), base = *this;
  for (; k; k >>= 1) {
    if (k & 1) acc = acc * base;
    if (k > 1) base = base * base;
  }
  return acc;
}

FieldElement Poly::evaluate(const FieldElement& x) const
{
  require_same_field(spec_, x.spec());
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = spec_.add(spec_.mul(acc, x.code()), c_[i]);
  return {spec_, acc};
}

std::string Poly::to_string() const
{
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += "+";
    std::string coef = spec_.format(c_[i]);
    if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
    if (i == 0) {
      s += coef;
      continue;
    }
    if (c_[i] != 1) s += coef + "*";
    s += "T";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

Poly Poly::parse(std::string_view text, const FieldSpec& spec)
{
  auto expr = detail::parse_expr(text, spec.p(), 'T', spec.is_prime_field() ? '\0' : 'x');
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> by_degree;
  std::uint64_t top = 0;
  for (const auto& [key, c] : expr.terms) {
    if (key.first > kMaxDenseDegree)
      throw Error(ErrorKind::ParseError, "degree too large in \"" + std::string(text) + "\"");
    if (key.second > 4096)
      throw Error(ErrorKind::ParseError, "generator power too large in \"" + std::string(text) + "\"");
    if (by_degree.empty() || by_degree.back().first != key.first) by_degree.push_back({key.first, {}});
    auto& x = by_degree.back().second;
    if (x.size() <= key.second) x.resize(key.second + 1, 0);
    x[key.second] = c;
    top = std::max(top, key.first);
  }
  if (by_degree.empty()) return Poly(spec);
  std::vector<Code> out(top + 1, 0);
  for (auto& [deg, x] : by_degree) out[deg] = spec.from_generator_poly(std::move(x));
  return Poly(spec, std::move(out));
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op)
{
  switch (op) {
  case PolyOp::Add: return a + b;
  case PolyOp::Sub: return a - b;
  case PolyOp::Mul: return a * b;
  }
  return a;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b)
{
  require_same_field(a.spec(), b.spec());
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const FieldSpec& f = a.spec();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Code> rem = a.codes();
  const auto& d = b.codes();
  const std::size_t db = d.size() - 1;
  std::vector<Code> q(rem.size() - db, 0);
  const Code li = f.inv(d.back());
  for (std::size_t k = rem.size(); k-- > db;) {
    Code c = rem[k];
    if (c == 0) continue;
    c = f.mul(c, li);
    const std::size_t shift = k - db;
    q[shift] = c;
    const Code nc = f.neg(c);
    for (std::size_t i = 0; i <= db; ++i) rem[shift + i] = f.add(rem[shift + i], f.mul(nc, d[i]));
  }
  rem.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(rem))};
}

namespace {

// In-place remainder of a by b (both trimmed, b nonzero); prime-field fast path.
void rem_in_place(std::vector<Code>& a, const std::vector<Code>& b, const FieldSpec& f)
{
  const std::size_t db = b.size() - 1;
  const Code li = f.inv(b.back());
  while (a.size() > db) {
    const Code c = f.mul(a.back(), li);
    const std::size_t shift = a.size() - 1 - db;
    if (c != 0) {
      const Code nc = f.neg(c);
      if (f.is_prime_field()) {
        const std::uint64_t p = f.p(), m = nc;
        for (std::size_t i = 0; i < db; ++i) a[shift + i] = Code((a[shift + i] + m * b[i]) % p);
      } else {
        for (std::size_t i = 0; i < db; ++i) a[shift + i] = f.add(a[shift + i], f.mul(nc, b[i]));
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b)
{
  require_same_field(a.spec(), b.spec());
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  std::vector<Code> x = a.codes(), y = b.codes();
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    rem_in_place(x, y, a.spec());
    std::swap(x, y);
  }
  return Poly(a.spec(), std::move(x)).monic();
}

Poly poly_exact_div(const Poly& a, const Poly& b)
{
  if (b.is_one()) return a;
  return poly_divmod(a, b).first;
}

} // namespace hurwitz
