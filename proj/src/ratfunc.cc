#include "hurwitz/ratfunc.hh"

namespace hurwitz {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.spec(), 1)) {}

RatFunc RatFunc::from_int(const FieldSpec& spec, std::int64_t n) { return from_code(spec, spec.from_int(n)); }

RatFunc RatFunc::from_code(const FieldSpec& spec, Code c) { return RatFunc(Poly::constant(spec, c)); }

RatFunc rf_normalize(const Poly& num, const Poly& den)
{
  require_same_field(num.spec(), den.spec());
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  const FieldSpec& f = num.spec();
  if (num.is_zero()) return RatFunc(f);
  Poly g = poly_gcd(num, den);
  Poly n = poly_exact_div(num, g), d = poly_exact_div(den, g);
  const Code li = f.inv(d.lead());
  if (li != 1) {
    n = n.scaled(li);
    d = d.scaled(li);
  }
  return RatFunc(RatFunc::Canonical{}, std::move(n), std::move(d));
}

RatFunc RatFunc::operator+(const RatFunc& b) const
{
  require_same_field(spec(), b.spec());
  if (is_zero()) return b;
  if (b.is_zero()) return *this;
  if (den_.is_one() && b.den_.is_one()) return RatFunc(num_ + b.num_);
  // a/b + c/d with g = gcd(b, d): (a d' + c b') / (b' d) reduced by gcd(., g).
  Poly g = poly_gcd(den_, b.den_);
  if (g.is_one()) {
    Poly n = num_ * b.den_ + b.num_ * den_;
    if (n.is_zero()) return RatFunc(spec());
    return RatFunc(Canonical{}, std::move(n), den_ * b.den_);
  }
  Poly d1 = poly_exact_div(den_, g), d2 = poly_exact_div(b.den_, g);
  Poly n = num_ * d2 + b.num_ * d1;
  if (n.is_zero()) return RatFunc(spec());
  Poly g2 = poly_gcd(n, g);
  if (!g2.is_one()) {
    n = poly_exact_div(n, g2);
    return RatFunc(Canonical{}, std::move(n), d1 * poly_exact_div(b.den_, g2));
  }
  return RatFunc(Canonical{}, std::move(n), d1 * b.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(Canonical{}, -num_, den_); }

RatFunc RatFunc::operator-(const RatFunc& b) const { return *this + (-b); }

RatFunc RatFunc::operator*(const RatFunc& b) const
{
  require_same_field(spec(), b.spec());
  if (is_zero() || b.is_zero()) return RatFunc(spec());
  if (is_one()) return b;
  if (b.is_one()) return *this;
  Poly g1 = poly_gcd(num_, b.den_), g2 = poly_gcd(b.num_, den_);
  Poly n = poly_exact_div(num_, g1) * poly_exact_div(b.num_, g2);
  Poly d = poly_exact_div(den_, g2) * poly_exact_div(b.den_, g1);
  return RatFunc(Canonical{}, std::move(n), std::move(d));
}

RatFunc RatFunc::inverse() const
{
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
  const Code li = spec().inv(num_.lead());
  return RatFunc(Canonical{}, den_.scaled(li), num_.scaled(li));
}

RatFunc RatFunc::operator/(const RatFunc& b) const
{
  require_same_field(spec(), b.spec());
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational function");
  return *this * b.inverse();
}

RatFunc RatFunc::scaled(Code c) const
{
  if (c == 0) return RatFunc(spec());
  return RatFunc(Canonical{}, num_.scaled(c), den_);
}

RatFunc RatFunc::pow(std::uint64_t k) const
{
  // Powers of a reduced fraction stay reduced; the denominator stays monic.
  if (k == 0) return one(spec());
  return RatFunc(Canonical{}, num_.pow(k), den_.pow(k));
}

std::string RatFunc::to_string() const
{
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + " / " + den_.to_string();
}

RatFunc RatFunc::parse(std::string_view text, const FieldSpec& spec)
{
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return RatFunc(Poly::parse(text, spec));
  if (text.find('/', slash + 1) != std::string_view::npos)
    throw Error(ErrorKind::ParseError, "more than one '/' in \"" + std::string(text) + "\"");
  Poly num = Poly::parse(text.substr(0, slash), spec);
  Poly den = Poly::parse(text.substr(slash + 1), spec);
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator in \"" + std::string(text) + "\"");
  return rf_normalize(num, den);
}

RatFunc rf_arith(const RatFunc& a, const RatFunc& b, RatOp op)
{
  switch (op) {
  case RatOp::Add: return a + b;
  case RatOp::Sub: return a - b;
  case RatOp::Mul: return a * b;
  case RatOp::Div: return a / b;
  }
  return a;
}

} // namespace hurwitz
