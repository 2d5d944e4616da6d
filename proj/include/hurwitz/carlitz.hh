#ifndef HURWITZ_CARLITZ_HH
#define HURWITZ_CARLITZ_HH

// Carlitz quantities over F_r[T]:
//   [i]  = T^{r^i} - T
//   D_i  = [i] D_{i-1}^r,  D_0 = 1
//   L_i  = [i] L_{i-1},    L_0 = 1
//   Pi(n) = prod_j D_j^{c_j} over the r-ary digits c_j of n
// and the truncated Carlitz exponential and logarithm.

#include <cstdint>
#include <vector>

#include "hurwitz/series.hh"

namespace hurwitz {

enum class Family { BernoulliCarlitz, CauchyCarlitz, Custom };

// Least significant digit first; empty for n = 0.
std::vector<std::uint64_t> rdigits(std::uint64_t n, std::uint64_t r);

class CarlitzContext {
public:
  // Caches [i], D_i, L_i for i <= max_index. Indices past the cache are
  // computed on demand without being stored.
  CarlitzContext(FieldSpec spec, std::uint64_t max_index);

  // Cache sized for series truncated at `order`: the largest j with r^j - 1 < order.
  static CarlitzContext for_order(const FieldSpec& spec, std::size_t order);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t r() const { return spec_.r(); }
  std::uint64_t max_index() const { return max_index_; }

  // i >= 1.
  Poly bracket(std::uint64_t i) const;
  Poly D(std::uint64_t i) const;
  Poly L(std::uint64_t i) const;
  Poly factorial(std::uint64_t n) const;

  TruncSeries exp_series(std::size_t order) const;
  TruncSeries log_series(std::size_t order) const;
  // e_C(z)/z for BernoulliCarlitz, log_C(z)/z for CauchyCarlitz.
  TruncSeries lambda_series(Family family, std::size_t order) const;

private:
  FieldSpec spec_;
  std::uint64_t max_index_;
  std::vector<Poly> bracket_; // bracket_[0] unused
  std::vector<Poly> d_;
  std::vector<Poly> l_;
};

} // namespace hurwitz

#endif // HURWITZ_CARLITZ_HH
