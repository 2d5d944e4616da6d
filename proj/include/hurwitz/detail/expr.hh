#ifndef HURWITZ_DETAIL_EXPR_HH
#define HURWITZ_DETAIL_EXPR_HH

// Shared reader for the textual forms of field elements, polynomials and
// moduli: sums of products of integers, variables, parentheses and powers,
// with integer coefficients reduced mod p as they are read.

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>

namespace hurwitz::detail {

// Sparse polynomial in two variables over F_p. Key is (outer degree, inner
// degree); the outer variable is T for polynomials, the inner one is the
// field generator x.
struct Expr {
  std::uint32_t p = 2;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> terms;
};

// `outer` and `inner` name the accepted variables; pass '\0' to reject one.
// Throws Error(ParseError).
Expr parse_expr(std::string_view text, std::uint32_t p, char outer, char inner);

} // namespace hurwitz::detail

#endif // HURWITZ_DETAIL_EXPR_HH
