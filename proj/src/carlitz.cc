#include "hurwitz/carlitz.hh"

#include <stdexcept>
#include <string>

namespace hurwitz {
namespace {

Poly make_bracket(const FieldSpec& spec, std::uint64_t i)
{
  const std::uint64_t deg = checked_pow(spec.r(), i);
  return Poly::monomial(spec, 1, deg) - Poly::variable(spec);
}

// D_i = [i][i-1]^r ... [1]^{r^{i-1}} multiplied out term by term.
Poly literal_D(const CarlitzContext& ctx, std::uint64_t i)
{
  Poly out = Poly::constant(ctx.spec(), 1);
  for (std::uint64_t k = 1; k <= i; ++k) out = out * ctx.bracket(k).pow(checked_pow(ctx.r(), i - k));
  return out;
}

Poly literal_L(const CarlitzContext& ctx, std::uint64_t i)
{
  Poly out = Poly::constant(ctx.spec(), 1);
  for (std::uint64_t k = 1; k <= i; ++k) out = out * ctx.bracket(k);
  return out;
}

// Exponents r^j with r^j < order.
std::vector<std::uint64_t> power_exponents(std::uint64_t r, std::size_t order)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 1; q < order; q *= r) {
    out.push_back(q);
    if (q > (std::uint64_t(1) << 62) / r) break;
  }
  return out;
}

} // namespace

std::vector<std::uint64_t> rdigits(std::uint64_t n, std::uint64_t r)
{
  std::vector<std::uint64_t> out;
  for (; n; n /= r) out.push_back(n % r);
  return out;
}

CarlitzContext::CarlitzContext(FieldSpec spec, std::uint64_t max_index) : spec_(std::move(spec)), max_index_(max_index)
{
  bracket_.push_back(Poly::constant(spec_, 0));
  d_.push_back(Poly::constant(spec_, 1));
  l_.push_back(Poly::constant(spec_, 1));
  for (std::uint64_t i = 1; i <= max_index_; ++i) {
    bracket_.push_back(make_bracket(spec_, i));
    d_.push_back(bracket_[i] * d_[i - 1].pow(spec_.r()));
    l_.push_back(bracket_[i] * l_[i - 1]);
    if (i <= 3) {
      if (!(d_[i] == literal_D(*this, i)) || !(l_[i] == literal_L(*this, i)))
        throw std::logic_error("Carlitz recurrence disagrees with the bracket product at i = " +
                               std::to_string(i));
    }
  }
}

CarlitzContext CarlitzContext::for_order(const FieldSpec& spec, std::size_t order)
{
  std::uint64_t j = 0;
  const auto exps = power_exponents(spec.r(), order + 1);
  // r^j - 1 < order  <=>  r^j < order + 1
  if (!exps.empty()) j = exps.size() - 1;
  return CarlitzContext(spec, j);
}

Poly CarlitzContext::bracket(std::uint64_t i) const
{
  if (i >= 1 && i <= max_index_) return bracket_[i];
  if (i == 0) throw Error(ErrorKind::OrderUnderflow, "bracket index must be >= 1");
  return make_bracket(spec_, i);
}

Poly CarlitzContext::D(std::uint64_t i) const
{
  if (i <= max_index_) return d_[i];
  Poly out = d_[max_index_];
  for (std::uint64_t k = max_index_ + 1; k <= i; ++k) out = bracket(k) * out.pow(spec_.r());
  return out;
}

Poly CarlitzContext::L(std::uint64_t i) const
{
  if (i <= max_index_) return l_[i];
  Poly out = l_[max_index_];
  for (std::uint64_t k = max_index_ + 1; k <= i; ++k) out = bracket(k) * out;
  return out;
}

Poly CarlitzContext::factorial(std::uint64_t n) const
{
  Poly out = Poly::constant(spec_, 1);
  const auto digits = rdigits(n, spec_.r());
  for (std::size_t j = 0; j < digits.size(); ++j)
    if (digits[j] != 0) out = out * D(j).pow(digits[j]);
  return out;
}

TruncSeries CarlitzContext::exp_series(std::size_t order) const
{
  TruncSeries s(spec_, order);
  const auto exps = power_exponents(spec_.r(), order);
  for (std::size_t j = 0; j < exps.size(); ++j) s.set(exps[j], RatFunc::one(spec_) / RatFunc(D(j)));
  return s;
}

TruncSeries CarlitzContext::log_series(std::size_t order) const
{
  TruncSeries s(spec_, order);
  const auto exps = power_exponents(spec_.r(), order);
  for (std::size_t j = 0; j < exps.size(); ++j)
    s.set(exps[j], RatFunc::from_int(spec_, j % 2 == 0 ? 1 : -1) / RatFunc(L(j)));
  return s;
}

TruncSeries CarlitzContext::lambda_series(Family family, std::size_t order) const
{
  if (family == Family::Custom)
    throw Error(ErrorKind::NormalizationError, "custom families carry their own lambda series");
  TruncSeries s(spec_, order);
  const auto exps = power_exponents(spec_.r(), order + 1);
  for (std::size_t j = 0; j < exps.size(); ++j) {
    const Poly q = family == Family::BernoulliCarlitz ? D(j) : L(j);
    const std::int64_t sign = family == Family::CauchyCarlitz && j % 2 == 1 ? -1 : 1;
    s.set(exps[j] - 1, RatFunc::from_int(spec_, sign) / RatFunc(q));
  }
  return s;
}

} // namespace hurwitz
