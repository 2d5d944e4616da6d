#include "hurwitz/ht_rules.hh"

#include <vector>

#include "hurwitz/combinatorics.hh"

namespace hurwitz {
namespace {

// H^(i)(f) for i = 0..m, each truncated to the common order f.order - m.
std::vector<TruncSeries> derivatives(const TruncSeries& f, std::uint64_t m)
{
  const std::size_t order = f.order() - m;
  std::vector<TruncSeries> out;
  for (std::uint64_t i = 0; i <= m; ++i) out.push_back(ht_derivative(f, i).truncated(order));
  return out;
}

void check_rule_order(const TruncSeries& f, std::uint64_t m)
{
  if (m >= f.order())
    throw Error(ErrorKind::OrderUnderflow,
                "H^(" + std::to_string(m) + ") of a series of order " + std::to_string(f.order()));
}

// sum over compositions of m into k parts >= min_part of prod H^(parts)(f).
TruncSeries composition_sum(const std::vector<TruncSeries>& d, std::uint64_t m, std::size_t k,
                            std::uint64_t min_part)
{
  const FieldSpec& spec = d[0].spec();
  const std::size_t order = d[0].order();
  TruncSeries acc(spec, order);
  for_each_composition(m, k, min_part, [&](std::span<const std::uint64_t> parts) {
    TruncSeries term = TruncSeries::one(spec, order);
    for (auto i : parts) term = ts_mul(term, d[i]);
    acc = ts_add(acc, term);
  });
  return acc;
}

} // namespace

TruncSeries ht_product_rule(std::span<const TruncSeries> factors, std::uint64_t m)
{
  if (factors.empty()) throw Error(ErrorKind::OrderUnderflow, "product rule needs at least one factor");
  std::size_t order = factors[0].order();
  for (const auto& f : factors) order = std::min(order, f.order());
  if (m >= order)
    throw Error(ErrorKind::OrderUnderflow, "H^(" + std::to_string(m) + ") of a series of order " + std::to_string(order));
  std::vector<std::vector<TruncSeries>> d;
  for (const auto& f : factors) d.push_back(derivatives(f.truncated(order), m));
  const FieldSpec& spec = factors[0].spec();
  TruncSeries acc(spec, order - m);
  for_each_composition(m, factors.size(), 0, [&](std::span<const std::uint64_t> parts) {
    TruncSeries term = TruncSeries::one(spec, order - m);
    for (std::size_t j = 0; j < parts.size(); ++j) term = ts_mul(term, d[j][parts[j]]);
    acc = ts_add(acc, term);
  });
  return acc;
}

TruncSeries ht_quotient_rule(const TruncSeries& f, std::uint64_t m)
{
  check_rule_order(f, m);
  const FieldSpec& spec = f.spec();
  auto d = derivatives(f, m);
  const TruncSeries inv = ts_invert(d[0]);
  TruncSeries inv_power = inv; // f^{-(k+1)}
  TruncSeries acc(spec, d[0].order());
  for (std::uint64_t k = 1; k <= m; ++k) {
    inv_power = ts_mul(inv_power, inv);
    TruncSeries inner = composition_sum(d, m, k, 1);
    TruncSeries term = ts_mul(inv_power, inner);
    if (k % 2 == 1) term = ts_scale(term, RatFunc::from_int(spec, -1));
    acc = ts_add(acc, term);
  }
  return acc;
}

TruncSeries ht_quotient_rule_binomial(const TruncSeries& f, std::uint64_t m)
{
  check_rule_order(f, m);
  const FieldSpec& spec = f.spec();
  auto d = derivatives(f, m);
  const TruncSeries inv = ts_invert(d[0]);
  TruncSeries inv_power = inv;
  TruncSeries acc(spec, d[0].order());
  for (std::uint64_t k = 1; k <= m; ++k) {
    inv_power = ts_mul(inv_power, inv);
    const std::uint32_t b = binom_mod_p(m + 1, k + 1, spec.p());
    if (b == 0) continue;
    TruncSeries inner = composition_sum(d, m, k, 0);
    std::int64_t c = k % 2 == 1 ? -std::int64_t(b) : std::int64_t(b);
    acc = ts_add(acc, ts_scale(ts_mul(inv_power, inner), RatFunc::from_int(spec, c)));
  }
  return acc;
}

TruncSeries ht_power_rule(const TruncSeries& f, std::uint64_t j, std::uint64_t m)
{
  check_rule_order(f, m);
  const FieldSpec& spec = f.spec();
  auto d = derivatives(f, m);
  const std::size_t order = d[0].order();
  // Terms grouped by k = i_1 + ... + i_m.
  std::vector<TruncSeries> by_k(j + 1, TruncSeries(spec, order));
  for_each_partition(m, [&](std::span<const std::uint64_t> mult) {
    std::uint64_t k = 0;
    BigInt den = 1;
    for (auto i : mult) {
      k += i;
      den *= factorial(i);
    }
    if (k > j) return;
    const std::uint64_t c = reduce_mod(falling_factorial(j, k) / den, spec.p());
    if (c == 0) return;
    TruncSeries term = TruncSeries::one(spec, order);
    for (std::size_t t = 0; t < mult.size(); ++t)
      for (std::uint64_t rep = 0; rep < mult[t]; ++rep) term = ts_mul(term, d[t + 1]);
    by_k[k] = ts_add(by_k[k], ts_scale(term, RatFunc::from_int(spec, std::int64_t(c))));
  });
  TruncSeries acc(spec, order);
  for (std::uint64_t k = 1; k <= j; ++k) acc = ts_add(acc, ts_mul(ts_pow(d[0], j - k), by_k[k]));
  return acc;
}

} // namespace hurwitz
