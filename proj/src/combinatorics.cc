#include "hurwitz/combinatorics.hh"

namespace hurwitz {
namespace {

void compose(std::uint64_t remaining, std::size_t left, std::uint64_t min_part, std::vector<std::uint64_t>& parts,
             const std::function<void(std::span<const std::uint64_t>)>& visit)
{
  if (left == 0) {
    if (remaining == 0) visit(parts);
    return;
  }
  // The other left-1 parts need at least min_part each.
  const std::uint64_t reserved = min_part * (left - 1);
  if (remaining < reserved + min_part) return;
  const std::uint64_t hi = remaining - reserved;
  for (std::uint64_t v = min_part; v <= hi; ++v) {
    parts.push_back(v);
    compose(remaining - v, left - 1, min_part, parts, visit);
    parts.pop_back();
  }
}

void partition(std::uint64_t remaining, std::uint64_t part, std::vector<std::uint64_t>& mult,
               const std::function<void(std::span<const std::uint64_t>)>& visit)
{
  if (remaining == 0) {
    visit(mult);
    return;
  }
  if (part == 0) return;
  for (std::uint64_t k = remaining / part + 1; k-- > 0;) {
    mult[part - 1] = k;
    partition(remaining - k * part, part - 1, mult, visit);
  }
  mult[part - 1] = 0;
}

} // namespace

void for_each_composition(std::uint64_t total, std::size_t count, std::uint64_t min_part,
                          const std::function<void(std::span<const std::uint64_t>)>& visit)
{
  std::vector<std::uint64_t> parts;
  parts.reserve(count);
  compose(total, count, min_part, parts, visit);
}

void for_each_partition(std::uint64_t m, const std::function<void(std::span<const std::uint64_t>)>& visit)
{
  std::vector<std::uint64_t> mult(m, 0);
  partition(m, m, mult, visit);
}

BigInt count_compositions(std::uint64_t total, std::size_t count, std::uint64_t min_part)
{
  // Shift to parts >= 0, then stars and bars.
  if (count == 0) return total == 0 ? 1 : 0;
  if (total < min_part * count) return 0;
  const std::uint64_t free = total - min_part * count;
  std::uint64_t ks[2] = {free, count - 1};
  return multinomial(ks);
}

BigInt factorial(std::uint64_t n)
{
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt multinomial(std::span<const std::uint64_t> ks)
{
  std::uint64_t n = 0;
  BigInt den = 1;
  for (auto k : ks) {
    n += k;
    den *= factorial(k);
  }
  return factorial(n) / den;
}

BigInt falling_factorial(std::uint64_t n, std::uint64_t k)
{
  if (k > n) return 0;
  BigInt out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= (n - i);
  return out;
}

std::uint64_t reduce_mod(const BigInt& x, std::uint64_t p)
{
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

} // namespace hurwitz
