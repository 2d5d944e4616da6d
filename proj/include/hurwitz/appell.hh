#ifndef HURWITZ_APPELL_HH
#define HURWITZ_APPELL_HH

// Higher order Appell-Carlitz numbers AC_n^(l), defined by
//
//     1 / f(z)^l = sum_n AC_n^(l) / Pi(n) z^n,   f(z) = sum_n lambda_n z^n,
//
// computed by five independent routes: series inversion (the oracle), the
// convolution recurrence, the composition sum, the partition sum (l = 1) and
// the Toeplitz-Hessenberg determinant. D_l(e) below is the coefficient of z^e
// in f(z)^l.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hurwitz/carlitz.hh"

namespace hurwitz {

enum class Method { Closed, Determinant, Inversion, Partition, Recurrence };

inline constexpr Method kAllMethods[] = {Method::Closed, Method::Determinant, Method::Inversion, Method::Partition,
                                         Method::Recurrence};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

std::string_view family_name(Family f);   // "bernoulli-carlitz", ...
std::string_view family_symbol(Family f); // "BC", "CC", "AC"

// Literal-enumeration caps.
inline constexpr std::uint64_t kClosedMaxIndex = 20;
inline constexpr std::uint64_t kPartitionMaxIndex = 30;
inline constexpr std::uint64_t kDeterminantMaxIndex = 64;

class AppellFamily {
public:
  // e_C(z)/z or log_C(z)/z truncated at `order`.
  static AppellFamily builtin(Family label, const FieldSpec& spec, std::size_t order);
  // Throws NormalizationError unless lambda_0 = 1.
  static AppellFamily custom(TruncSeries lambda, Family label = Family::Custom);

  Family label() const { return label_; }
  const TruncSeries& lambda() const { return lambda_; }
  const CarlitzContext& ctx() const { return *ctx_; }
  const FieldSpec& spec() const { return lambda_.spec(); }
  std::size_t order() const { return lambda_.order(); }
  bool is_builtin() const { return builtin_; }

  // Same family at another truncation order. Built-in families are
  // regenerated; custom families can only shrink (OrderUnderflow otherwise).
  AppellFamily with_order(std::size_t order) const;

private:
  AppellFamily(Family label, TruncSeries lambda, std::shared_ptr<const CarlitzContext> ctx, bool builtin);

  Family label_;
  TruncSeries lambda_;
  std::shared_ptr<const CarlitzContext> ctx_;
  bool builtin_;
};

struct ACResult {
  Family family;
  std::uint64_t r;
  std::uint64_t ell;
  std::uint64_t n;
  RatFunc value;
  Method method;
};

// AC_0 .. AC_{n_max} from the inverse of f^l. Requires order > n_max.
std::vector<ACResult> ac_inversion(const AppellFamily& fam, std::uint64_t ell, std::uint64_t n_max);

// AC_m = -Pi(m) sum_{i<m} AC_i / Pi(i) D_l(m-i), AC_0 = 1.
std::vector<ACResult> ac_recurrence(const AppellFamily& fam, std::uint64_t ell, std::uint64_t n_max);

// AC_m = Pi(m) sum_k (-1)^k sum_{e_1+...+e_k=m, e_i>=1} D_l(e_1)...D_l(e_k), m <= 20.
ACResult ac_closed(const AppellFamily& fam, std::uint64_t ell, std::uint64_t m);

// AC_m = Pi(m) sum_j (-1)^j sum_{|i|=j, sum t i_t = m} (j; i_1..i_m) lambda_1^{i_1}...lambda_m^{i_m},
// l = 1 only, m <= 30.
ACResult ac_partition(const AppellFamily& fam, std::uint64_t m);

// AC_m = (-1)^m Pi(m) det H_m, H_m lower Hessenberg Toeplitz with first
// column D_l(1..m) and unit superdiagonal, m <= 64.
ACResult ac_determinant(const AppellFamily& fam, std::uint64_t ell, std::uint64_t m);

// Carlitz's recurrence over r-powers:
// BC_n = -sum_{j=1}^{[log_r(n+1)]} Pi(n) / (Pi(r^j) Pi(n+1-r^j)) BC_{n+1-r^j}.
std::vector<ACResult> bc_native_recurrence(const CarlitzContext& ctx, std::uint64_t n_max);

// M^(l)(i): sum over ordered l-tuples of exponents with r^{e_1}+...+r^{e_l} = i of
// 1/(Pi(r^{e_1})...Pi(r^{e_l}))  (BernoulliCarlitz), or
// (-1)^{e_1+...+e_l}/(L_{e_1}...L_{e_l})  (CauchyCarlitz).
RatFunc m_ell(Family family, const CarlitzContext& ctx, std::uint64_t ell, std::uint64_t i);

// Pi(m) sum_j (-1)^j sum_{i_1+...+i_j=m, i_k>=1} M^(l)(i_1+l)...M^(l)(i_j+l), m <= 20.
ACResult ac_corollary_closed(Family family, const CarlitzContext& ctx, std::uint64_t ell, std::uint64_t m);

// sum_{i_1+...+i_{l+1}=m} lambda_{i_1}...lambda_{i_l} AC_{i_{l+1}} / Pi(i_{l+1}),
// with ac[n] = AC_n^(l). Vanishes for m >= 1.
RatFunc defining_convolution(const AppellFamily& fam, std::uint64_t ell, std::uint64_t m, std::span<const RatFunc> ac);

// Runs one method for n = 0..n_max. AC_0 = 1 for every method.
std::vector<ACResult> ac_compute(const AppellFamily& fam, Method method, std::uint64_t ell, std::uint64_t n_max);

using RatMatrix = std::vector<std::vector<RatFunc>>;

// m x m matrix with entry (i, j) = D(i - j + 1) for i >= j, 1 on the
// superdiagonal, 0 above it. d[e] holds D(e); d[0] is ignored.
RatMatrix hessenberg_toeplitz(std::span<const RatFunc> d, std::size_t m, const FieldSpec& spec);

// Gaussian elimination over F_r(T) with row pivoting.
RatFunc determinant(RatMatrix a, const FieldSpec& spec);

} // namespace hurwitz

#endif // HURWITZ_APPELL_HH
