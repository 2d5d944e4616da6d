#include "hurwitz/series.hh"

#include <algorithm>
#include <set>
#include <string>

namespace hurwitz {
namespace {

std::uint32_t inv_mod_small(std::uint64_t a, std::uint32_t p)
{
  std::uint64_t out = 1, b = a % p;
  for (std::uint64_t k = p - 2; k; k >>= 1, b = b * b % p)
    if (k & 1) out = out * b % p;
  return std::uint32_t(out);
}

std::uint32_t digit_binom_direct(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t i = 0; i < b; ++i) {
    num = num * (a - i) % p;
    den = den * (i + 1) % p;
  }
  return std::uint32_t(num * inv_mod_small(den, p) % p);
}

void check_order(const TruncSeries& s, std::size_t n)
{
  if (n >= s.order())
    throw Error(ErrorKind::OrderUnderflow,
                "coefficient " + std::to_string(n) + " requested from a series of order " + std::to_string(s.order()));
}

} // namespace

TruncSeries::TruncSeries(const FieldSpec& spec, std::size_t order) : spec_(spec), c_(order, RatFunc(spec)) {}

TruncSeries::TruncSeries(std::vector<RatFunc> coeffs, const FieldSpec& spec) : spec_(spec), c_(std::move(coeffs))
{
  for (const auto& c : c_) require_same_field(spec_, c.spec());
}

TruncSeries TruncSeries::one(const FieldSpec& spec, std::size_t order)
{
  TruncSeries s(spec, order);
  if (order > 0) s.c_[0] = RatFunc::one(spec);
  return s;
}

TruncSeries TruncSeries::variable(const FieldSpec& spec, std::size_t order)
{
  TruncSeries s(spec, order);
  if (order > 1) s.c_[1] = RatFunc::one(spec);
  return s;
}

TruncSeries TruncSeries::from_sparse(const FieldSpec& spec, std::size_t order,
                                     std::span<const std::pair<std::size_t, RatFunc>> terms)
{
  TruncSeries s(spec, order);
  std::set<std::size_t> seen;
  for (const auto& [n, v] : terms) {
    if (!seen.insert(n).second) throw Error(ErrorKind::ParseError, "exponent " + std::to_string(n) + " given twice");
    check_order(s, n);
    require_same_field(spec, v.spec());
    s.c_[n] = v;
  }
  return s;
}

const RatFunc& TruncSeries::coeff(std::size_t n) const
{
  check_order(*this, n);
  return c_[n];
}

void TruncSeries::set(std::size_t n, RatFunc v)
{
  check_order(*this, n);
  require_same_field(spec_, v.spec());
  c_[n] = std::move(v);
}

TruncSeries TruncSeries::truncated(std::size_t order) const
{
  if (order > c_.size())
    throw Error(ErrorKind::OrderUnderflow,
                "cannot extend a series of order " + std::to_string(c_.size()) + " to " + std::to_string(order));
  return TruncSeries(std::vector<RatFunc>(c_.begin(), c_.begin() + std::ptrdiff_t(order)), spec_);
}

BinomTable::BinomTable(std::uint32_t p) : p_(p)
{
  if (p <= kPascalLimit) {
    pascal_.assign(std::size_t(p) * (p + 1) / 2, 0);
    for (std::uint32_t a = 0; a < p; ++a) {
      const std::size_t row = std::size_t(a) * (a + 1) / 2;
      pascal_[row] = 1;
      pascal_[row + a] = 1;
      const std::size_t prev = a == 0 ? 0 : std::size_t(a - 1) * a / 2;
      for (std::uint32_t b = 1; b < a; ++b) pascal_[row + b] = (pascal_[prev + b - 1] + pascal_[prev + b]) % p;
    }
  }
}

std::uint32_t BinomTable::digit_binom(std::uint32_t a, std::uint32_t b) const
{
  if (b > a) return 0;
  if (!pascal_.empty()) return pascal_[std::size_t(a) * (a + 1) / 2 + b];
  return digit_binom_direct(a, b, p_);
}

std::uint32_t BinomTable::operator()(std::uint64_t n, std::uint64_t m) const
{
  if (m > n) return 0;
  std::uint64_t out = 1 % p_;
  while (m > 0 || n > 0) {
    const std::uint32_t nd = std::uint32_t(n % p_), md = std::uint32_t(m % p_);
    if (md > nd) return 0;
    out = out * digit_binom(nd, md) % p_;
    n /= p_;
    m /= p_;
  }
  return std::uint32_t(out);
}

std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t m, std::uint32_t p)
{
  if (m > n) return 0;
  std::uint64_t out = 1 % p;
  while (m > 0 || n > 0) {
    const std::uint32_t nd = std::uint32_t(n % p), md = std::uint32_t(m % p);
    if (md > nd) return 0;
    out = out * digit_binom_direct(nd, md, p) % p;
    n /= p;
    m /= p;
  }
  return std::uint32_t(out);
}

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b)
{
  require_same_field(a.spec(), b.spec());
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<RatFunc> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeffs()[i] + b.coeffs()[i]);
  return TruncSeries(std::move(out), a.spec());
}

TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b)
{
  require_same_field(a.spec(), b.spec());
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<RatFunc> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeffs()[i] - b.coeffs()[i]);
  return TruncSeries(std::move(out), a.spec());
}

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b)
{
  require_same_field(a.spec(), b.spec());
  const std::size_t n = std::min(a.order(), b.order());
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<RatFunc> out(n, RatFunc(a.spec()));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (y[j].is_zero()) continue;
      out[i + j] += x[i] * y[j];
    }
  }
  return TruncSeries(std::move(out), a.spec());
}

TruncSeries ts_scale(const TruncSeries& a, const RatFunc& c)
{
  std::vector<RatFunc> out;
  out.reserve(a.order());
  for (const auto& x : a.coeffs()) out.push_back(x * c);
  return TruncSeries(std::move(out), a.spec());
}

TruncSeries ts_invert(const TruncSeries& f)
{
  const std::size_t n = f.order();
  if (n == 0) return f;
  const auto& c = f.coeffs();
  if (c[0].is_zero()) throw Error(ErrorKind::NonUnitConstantTerm, "cannot invert a series with zero constant term");
  const RatFunc inv0 = c[0].inverse();
  const RatFunc neg_inv0 = -inv0;
  std::vector<RatFunc> g;
  g.reserve(n);
  g.push_back(inv0);
  for (std::size_t k = 1; k < n; ++k) {
    RatFunc acc(f.spec());
    for (std::size_t i = 1; i <= k; ++i) {
      if (c[i].is_zero() || g[k - i].is_zero()) continue;
      acc += c[i] * g[k - i];
    }
    g.push_back(acc * neg_inv0);
  }
  return TruncSeries(std::move(g), f.spec());
}

TruncSeries ts_pow(const TruncSeries& f, std::uint64_t ell)
{
  TruncSeries acc = TruncSeries::one(f.spec(), f.order());
  for (std::uint64_t i = 0; i < ell; ++i) acc = ts_mul(acc, f);
  return acc;
}

TruncSeries ts_compose(const TruncSeries& f, const TruncSeries& g)
{
  require_same_field(f.spec(), g.spec());
  if (g.order() > 0 && !g.coeffs()[0].is_zero())
    throw Error(ErrorKind::InnerConstantNonzero, "inner series of a composition must vanish at z = 0");
  const std::size_t n = std::min(f.order(), g.order());
  TruncSeries inner = g.truncated(n);
  TruncSeries acc(f.spec(), n);
  for (std::size_t k = n; k-- > 0;) {
    acc = ts_mul(acc, inner);
    if (n > 0) acc.set(0, acc.coeffs()[0] + f.coeffs()[k]);
  }
  return acc;
}

TruncSeries ht_derivative(const TruncSeries& f, std::uint64_t m)
{
  if (m >= f.order() && !(m == 0 && f.order() == 0))
    throw Error(ErrorKind::OrderUnderflow,
                "H^(" + std::to_string(m) + ") of a series of order " + std::to_string(f.order()));
  if (m == 0) return f;
  const BinomTable binom(f.spec().p());
  const std::size_t n = f.order() - m;
  std::vector<RatFunc> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint32_t b = binom(k + m, m);
    out.push_back(b == 0 ? RatFunc(f.spec()) : f.coeffs()[k + m].scaled(f.spec().from_int(b)));
  }
  return TruncSeries(std::move(out), f.spec());
}

std::vector<RatFunc> conv_coeffs(const TruncSeries& f, std::uint64_t ell, std::size_t count)
{
  if (count > f.order())
    throw Error(ErrorKind::OrderUnderflow,
                std::to_string(count) + " coefficients requested from a series of order " + std::to_string(f.order()));
  const auto& lam = f.coeffs();
  std::vector<RatFunc> cur(count, RatFunc(f.spec()));
  if (count > 0) cur[0] = RatFunc::one(f.spec());
  for (std::uint64_t step = 0; step < ell; ++step) {
    std::vector<RatFunc> next(count, RatFunc(f.spec()));
    for (std::size_t i = 0; i < count; ++i) {
      if (cur[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < count; ++j) {
        if (lam[j].is_zero()) continue;
        next[i + j] += cur[i] * lam[j];
      }
    }
    cur = std::move(next);
  }
  return cur;
}

RatFunc conv_coeff(const TruncSeries& f, std::uint64_t ell, std::size_t e)
{
  check_order(f, e);
  return conv_coeffs(f, ell, e + 1)[e];
}

} // namespace hurwitz
