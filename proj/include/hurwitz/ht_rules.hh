#ifndef HURWITZ_HT_RULES_HH
#define HURWITZ_HT_RULES_HH

// Right-hand sides of the Hasse-Teichmueller calculus rules, evaluated
// literally from derivatives of the factors. Each is an identity of series
// and can be compared with ht_derivative applied to the left-hand side.
// Results have order (input order) - m.

#include <cstdint>
#include <span>

#include "hurwitz/series.hh"

namespace hurwitz {

// H^(m)(f_1 ... f_k) = sum_{i_1+...+i_k=m, i_j>=0} H^(i_1)(f_1) ... H^(i_k)(f_k).
TruncSeries ht_product_rule(std::span<const TruncSeries> factors, std::uint64_t m);

// H^(m)(1/f) = sum_{k=1}^m (-1)^k f^{-(k+1)} sum_{i_1+...+i_k=m, i_j>=1} prod H^(i_j)(f).
TruncSeries ht_quotient_rule(const TruncSeries& f, std::uint64_t m);

// H^(m)(1/f) = sum_{k=1}^m binom(m+1, k+1) (-1)^k f^{-(k+1)}
//                 sum_{i_1+...+i_k=m, i_j>=0} prod H^(i_j)(f).
TruncSeries ht_quotient_rule_binomial(const TruncSeries& f, std::uint64_t m);

// H^(m)(f^j) = sum_{k=1}^j f^{j-k} sum_{mult} j(j-1)...(j-k+1) / (i_1! ... i_m!)
//                 (H^(1) f)^{i_1} ... (H^(m) f)^{i_m},
// over multiplicity vectors with i_1+...+i_m = k and i_1+2i_2+...+m i_m = m.
TruncSeries ht_power_rule(const TruncSeries& f, std::uint64_t j, std::uint64_t m);

} // namespace hurwitz

#endif // HURWITZ_HT_RULES_HH
