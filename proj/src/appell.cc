#include "hurwitz/appell.hh"

#include <algorithm>
#include <map>
#include <string>

#include "hurwitz/combinatorics.hh"

namespace hurwitz {
namespace {

void require_order(const AppellFamily& fam, std::uint64_t n)
{
  if (fam.order() <= n)
    throw Error(ErrorKind::OrderUnderflow, "index " + std::to_string(n) + " needs a lambda series of order > " +
                                               std::to_string(n) + ", have " + std::to_string(fam.order()));
}

void require_ell(std::uint64_t ell)
{
  if (ell == 0) throw Error(ErrorKind::IndexTooLarge, "order ell must be >= 1");
}

RatFunc sign(const FieldSpec& spec, std::uint64_t k) { return RatFunc::from_int(spec, k % 2 == 0 ? 1 : -1); }

ACResult make_result(const AppellFamily& fam, std::uint64_t ell, std::uint64_t n, RatFunc v, Method method)
{
  return {fam.label(), fam.spec().r(), ell, n, std::move(v), method};
}

} // namespace

std::string_view method_name(Method m)
{
  switch (m) {
  case Method::Closed: return "closed";
  case Method::Determinant: return "determinant";
  case Method::Inversion: return "inversion";
  case Method::Partition: return "partition";
  case Method::Recurrence: return "recurrence";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name)
{
  for (Method m : kAllMethods)
    if (method_name(m) == name) return m;
  return std::nullopt;
}

std::string_view family_name(Family f)
{
  switch (f) {
  case Family::BernoulliCarlitz: return "bernoulli-carlitz";
  case Family::CauchyCarlitz: return "cauchy-carlitz";
  case Family::Custom: return "custom";
  }
  return "?";
}

std::string_view family_symbol(Family f)
{
  switch (f) {
  case Family::BernoulliCarlitz: return "BC";
  case Family::CauchyCarlitz: return "CC";
  case Family::Custom: return "AC";
  }
  return "?";
}

AppellFamily::AppellFamily(Family label, TruncSeries lambda, std::shared_ptr<const CarlitzContext> ctx, bool builtin)
    : label_(label), lambda_(std::move(lambda)), ctx_(std::move(ctx)), builtin_(builtin)
{
}

AppellFamily AppellFamily::builtin(Family label, const FieldSpec& spec, std::size_t order)
{
  if (label == Family::Custom) throw Error(ErrorKind::NormalizationError, "custom families need a lambda series");
  auto ctx = std::make_shared<const CarlitzContext>(CarlitzContext::for_order(spec, order));
  TruncSeries lambda = ctx->lambda_series(label, order);
  return AppellFamily(label, std::move(lambda), std::move(ctx), true);
}

AppellFamily AppellFamily::custom(TruncSeries lambda, Family label)
{
  if (lambda.order() == 0 || !lambda.coeffs()[0].is_one())
    throw Error(ErrorKind::NormalizationError,
                "lambda_0 must be 1 (got " + (lambda.order() == 0 ? std::string("nothing") : lambda.coeffs()[0].to_string()) + ")");
  auto ctx = std::make_shared<const CarlitzContext>(CarlitzContext::for_order(lambda.spec(), lambda.order()));
  return AppellFamily(label, std::move(lambda), std::move(ctx), false);
}

AppellFamily AppellFamily::with_order(std::size_t order) const
{
  if (builtin_) return builtin(label_, spec(), order);
  return AppellFamily(label_, lambda_.truncated(order), ctx_, false);
}

std::vector<ACResult> ac_inversion(const AppellFamily& fam, std::uint64_t ell, std::uint64_t n_max)
{
  require_ell(ell);
  require_order(fam, n_max);
  const TruncSeries f = fam.lambda().truncated(n_max + 1);
  const TruncSeries s = ts_invert(ts_pow(f, ell));
  std::vector<ACResult> out;
  for (std::uint64_t n = 0; n <= n_max; ++n)
    out.push_back(make_result(fam, ell, n, s.coeffs()[n] * RatFunc(fam.ctx().factorial(n)), Method::Inversion));
  return out;
}

std::vector<ACResult> ac_recurrence(const AppellFamily& fam, std::uint64_t ell, std::uint64_t n_max)
{
  require_ell(ell);
  require_order(fam, n_max);
  const FieldSpec& spec = fam.spec();
  const auto d = conv_coeffs(fam.lambda(), ell, n_max + 1);
  // scaled[i] = AC_i / Pi(i)
  std::vector<RatFunc> scaled{RatFunc::one(spec)};
  std::vector<ACResult> out{make_result(fam, ell, 0, RatFunc::one(spec), Method::Recurrence)};
  const RatFunc minus_one = RatFunc::from_int(spec, -1);
  for (std::uint64_t m = 1; m <= n_max; ++m) {
    RatFunc acc(spec);
    for (std::uint64_t i = 0; i < m; ++i) {
      if (scaled[i].is_zero() || d[m - i].is_zero()) continue;
      acc += scaled[i] * d[m - i];
    }
    RatFunc s = minus_one * acc;
    out.push_back(make_result(fam, ell, m, s * RatFunc(fam.ctx().factorial(m)), Method::Recurrence));
    scaled.push_back(std::move(s));
  }
  return out;
}

ACResult ac_closed(const AppellFamily& fam, std::uint64_t ell, std::uint64_t m)
{
  require_ell(ell);
  if (m > kClosedMaxIndex)
    throw Error(ErrorKind::IndexTooLargeForLiteralEnumeration,
                "composition sum enumerates 2^(m-1) terms; m = " + std::to_string(m) + " exceeds " +
                    std::to_string(kClosedMaxIndex));
  require_order(fam, m);
  const FieldSpec& spec = fam.spec();
  if (m == 0) return make_result(fam, ell, 0, RatFunc::one(spec), Method::Closed);
  const auto d = conv_coeffs(fam.lambda(), ell, m + 1);

  // Walk every composition of m into parts e with D_l(e) != 0. Compositions
  // with the same multiset of parts have the same product, so each leaf only
  // bumps the count of its multiset; the products are formed once per
  // multiset afterwards.
  std::map<std::vector<std::uint16_t>, std::uint64_t> count;
  std::vector<std::uint16_t> mult(m + 1, 0);
  auto walk = [&](auto&& self, std::uint64_t remaining) -> void {
    if (remaining == 0) {
      ++count[mult];
      return;
    }
    for (std::uint64_t e = 1; e <= remaining; ++e) {
      if (d[e].is_zero()) continue;
      ++mult[e];
      self(self, remaining - e);
      --mult[e];
    }
  };
  walk(walk, m);

  RatFunc sum(spec);
  for (const auto& [key, c] : count) {
    std::uint64_t parts = 0;
    RatFunc term = RatFunc::one(spec);
    for (std::size_t e = 1; e < key.size(); ++e) {
      if (key[e] == 0) continue;
      parts += key[e];
      term *= d[e].pow(key[e]);
    }
    term = term * RatFunc::from_int(spec, std::int64_t(c % spec.p())) * sign(spec, parts);
    sum += term;
  }
  return make_result(fam, ell, m, sum * RatFunc(fam.ctx().factorial(m)), Method::Closed);
}

ACResult ac_partition(const AppellFamily& fam, std::uint64_t m)
{
  if (m > kPartitionMaxIndex)
    throw Error(ErrorKind::IndexTooLarge, "partition sum is capped at m = " + std::to_string(kPartitionMaxIndex));
  require_order(fam, m);
  const FieldSpec& spec = fam.spec();
  if (m == 0) return make_result(fam, 1, 0, RatFunc::one(spec), Method::Partition);
  const auto& lam = fam.lambda().coeffs();
  RatFunc sum(spec);
  for_each_partition(m, [&](std::span<const std::uint64_t> mult) {
    std::uint64_t j = 0;
    for (std::size_t t = 0; t < mult.size(); ++t) {
      if (mult[t] == 0) continue;
      if (lam[t + 1].is_zero()) return;
      j += mult[t];
    }
    const std::uint64_t c = reduce_mod(multinomial(mult), spec.p());
    if (c == 0) return;
    RatFunc term = RatFunc::from_int(spec, std::int64_t(c)) * sign(spec, j);
    for (std::size_t t = 0; t < mult.size(); ++t)
      if (mult[t] != 0) term *= lam[t + 1].pow(mult[t]);
    sum += term;
  });
  return make_result(fam, 1, m, sum * RatFunc(fam.ctx().factorial(m)), Method::Partition);
}

RatMatrix hessenberg_toeplitz(std::span<const RatFunc> d, std::size_t m, const FieldSpec& spec)
{
  RatMatrix a(m, std::vector<RatFunc>(m, RatFunc(spec)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i + 1 == j) a[i][j] = RatFunc::one(spec);
      else if (i >= j) a[i][j] = d[i - j + 1];
    }
  return a;
}

RatFunc determinant(RatMatrix a, const FieldSpec& spec)
{
  const std::size_t n = a.size();
  RatFunc det = RatFunc::one(spec);
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    // Pivot: among rows with a nonzero entry in this column, the one with the
    // fewest nonzeros to its right.
    std::size_t pivot = n, best = n + 1;
    for (std::size_t row = col; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      std::size_t nnz = 0;
      for (std::size_t k = col + 1; k < n; ++k) nnz += !a[row][k].is_zero();
      if (nnz < best) {
        best = nnz;
        pivot = row;
      }
    }
    if (pivot == n) return RatFunc(spec);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      negate = !negate;
    }
    const RatFunc& p = a[col][col];
    const RatFunc inv = p.inverse();
    std::vector<std::size_t> support;
    for (std::size_t k = col + 1; k < n; ++k)
      if (!a[col][k].is_zero()) support.push_back(k);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      const RatFunc factor = a[row][col] * inv;
      for (std::size_t k : support) a[row][k] -= factor * a[col][k];
      a[row][col] = RatFunc(spec);
    }
    det *= p;
  }
  return negate ? -det : det;
}

ACResult ac_determinant(const AppellFamily& fam, std::uint64_t ell, std::uint64_t m)
{
  require_ell(ell);
  if (m > kDeterminantMaxIndex)
    throw Error(ErrorKind::IndexTooLarge, "determinant is capped at m = " + std::to_string(kDeterminantMaxIndex));
  require_order(fam, m);
  const FieldSpec& spec = fam.spec();
  if (m == 0) return make_result(fam, ell, 0, RatFunc::one(spec), Method::Determinant);
  const auto d = conv_coeffs(fam.lambda(), ell, m + 1);
  const RatFunc det = determinant(hessenberg_toeplitz(d, m, spec), spec);
  return make_result(fam, ell, m, sign(spec, m) * RatFunc(fam.ctx().factorial(m)) * det, Method::Determinant);
}

std::vector<ACResult> bc_native_recurrence(const CarlitzContext& ctx, std::uint64_t n_max)
{
  const FieldSpec& spec = ctx.spec();
  const std::uint64_t r = ctx.r();
  std::vector<RatFunc> bc{RatFunc::one(spec)};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const RatFunc pi_n(ctx.factorial(n));
    RatFunc acc(spec);
    // j from 1 while r^j <= n + 1.
    std::uint64_t q = r;
    for (std::uint64_t j = 1; q <= n + 1; ++j) {
      const std::uint64_t k = n + 1 - q;
      if (!bc[k].is_zero()) {
        const RatFunc den = RatFunc(ctx.factorial(q)) * RatFunc(ctx.factorial(k));
        acc += pi_n / den * bc[k];
      }
      if (q > (n + 1) / r) break;
      q *= r;
    }
    bc.push_back(-acc);
  }
  std::vector<ACResult> out;
  for (std::uint64_t n = 0; n <= n_max; ++n)
    out.push_back({Family::BernoulliCarlitz, r, 1, n, bc[n], Method::Recurrence});
  return out;
}

RatFunc m_ell(Family family, const CarlitzContext& ctx, std::uint64_t ell, std::uint64_t i)
{
  if (family == Family::Custom) throw Error(ErrorKind::NormalizationError, "M^(l) is defined for BC and CC only");
  require_ell(ell);
  const FieldSpec& spec = ctx.spec();
  const std::uint64_t r = ctx.r();
  // Exponents e with r^e <= i.
  std::vector<std::uint64_t> powers;
  for (std::uint64_t q = 1; q <= i; q *= r) {
    powers.push_back(q);
    if (q > i / r) break;
  }
  std::vector<RatFunc> weight;
  for (std::size_t e = 0; e < powers.size(); ++e) {
    if (family == Family::BernoulliCarlitz) weight.push_back(RatFunc(ctx.factorial(powers[e])).inverse());
    else weight.push_back(sign(spec, e) / RatFunc(ctx.L(e)));
  }
  RatFunc sum(spec);
  auto walk = [&](auto&& self, std::uint64_t remaining, std::uint64_t left, const RatFunc& prod) -> void {
    if (left == 0) {
      if (remaining == 0) sum += prod;
      return;
    }
    if (remaining < left) return; // every part is at least r^0 = 1
    for (std::size_t e = 0; e < powers.size() && powers[e] <= remaining; ++e)
      self(self, remaining - powers[e], left - 1, prod * weight[e]);
  };
  walk(walk, i, ell, RatFunc::one(spec));
  return sum;
}

ACResult ac_corollary_closed(Family family, const CarlitzContext& ctx, std::uint64_t ell, std::uint64_t m)
{
  require_ell(ell);
  if (m > kClosedMaxIndex)
    throw Error(ErrorKind::IndexTooLargeForLiteralEnumeration,
                "M^(l) composition sum enumerates 2^(m-1) terms; m = " + std::to_string(m) + " exceeds " +
                    std::to_string(kClosedMaxIndex));
  const FieldSpec& spec = ctx.spec();
  if (m == 0) return {family, ctx.r(), ell, 0, RatFunc::one(spec), Method::Closed};
  std::vector<RatFunc> mv{RatFunc(spec)};
  for (std::uint64_t i = 1; i <= m; ++i) mv.push_back(m_ell(family, ctx, ell, i + ell));
  RatFunc sum(spec);
  for (std::uint64_t j = 1; j <= m; ++j) {
    RatFunc inner(spec);
    for_each_composition(m, j, 1, [&](std::span<const std::uint64_t> parts) {
      RatFunc prod = RatFunc::one(spec);
      for (auto i : parts) {
        if (mv[i].is_zero()) return;
        prod *= mv[i];
      }
      inner += prod;
    });
    sum += sign(spec, j) * inner;
  }
  return {family, ctx.r(), ell, m, sum * RatFunc(ctx.factorial(m)), Method::Closed};
}

RatFunc defining_convolution(const AppellFamily& fam, std::uint64_t ell, std::uint64_t m, std::span<const RatFunc> ac)
{
  require_ell(ell);
  require_order(fam, m);
  if (ac.size() <= m) throw Error(ErrorKind::OrderUnderflow, "need AC_0 .. AC_m");
  const FieldSpec& spec = fam.spec();
  const auto& lam = fam.lambda().coeffs();
  RatFunc sum(spec);
  for_each_composition(m, ell + 1, 0, [&](std::span<const std::uint64_t> parts) {
    RatFunc prod = RatFunc::one(spec);
    for (std::size_t k = 0; k < ell; ++k) {
      if (lam[parts[k]].is_zero()) return;
      prod *= lam[parts[k]];
    }
    const std::uint64_t last = parts[ell];
    sum += prod * ac[last] / RatFunc(fam.ctx().factorial(last));
  });
  return sum;
}

std::vector<ACResult> ac_compute(const AppellFamily& fam, Method method, std::uint64_t ell, std::uint64_t n_max)
{
  switch (method) {
  case Method::Inversion: return ac_inversion(fam, ell, n_max);
  case Method::Recurrence: return ac_recurrence(fam, ell, n_max);
  default: break;
  }
  if (method == Method::Partition && ell != 1)
    throw Error(ErrorKind::IndexTooLarge, "the partition sum is defined for ell = 1 only");
  require_order(fam, n_max);
  std::vector<ACResult> out;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    switch (method) {
    case Method::Closed: out.push_back(ac_closed(fam, ell, n)); break;
    case Method::Partition: out.push_back(ac_partition(fam, n)); break;
    default: out.push_back(ac_determinant(fam, ell, n)); break;
    }
  }
  return out;
}

} // namespace hurwitz
