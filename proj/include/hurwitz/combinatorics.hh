#ifndef HURWITZ_COMBINATORICS_HH
#define HURWITZ_COMBINATORICS_HH

// Enumeration of compositions and partitions, and exact multinomials.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;

// Calls visit(parts) for every ordered tuple of `count` parts, each >= min_part,
// summing to `total`, in lexicographic order. Branches that cannot reach the
// total are cut off before they are expanded.
void for_each_composition(std::uint64_t total, std::size_t count, std::uint64_t min_part,
                          const std::function<void(std::span<const std::uint64_t>)>& visit);

// Calls visit(mult) for every multiplicity vector mult[0..m-1] (mult[t-1] is
// the multiplicity of part t) with sum_t t*mult[t-1] = m.
void for_each_partition(std::uint64_t m, const std::function<void(std::span<const std::uint64_t>)>& visit);

// Number of compositions of total into count parts >= min_part (exact).
BigInt count_compositions(std::uint64_t total, std::size_t count, std::uint64_t min_part);

BigInt factorial(std::uint64_t n);

// (sum k_i)! / prod k_i!
BigInt multinomial(std::span<const std::uint64_t> ks);

// n (n-1) ... (n-k+1)
BigInt falling_factorial(std::uint64_t n, std::uint64_t k);

// Non-negative residue of x mod p.
std::uint64_t reduce_mod(const BigInt& x, std::uint64_t p);

} // namespace hurwitz

#endif // HURWITZ_COMBINATORICS_HH
