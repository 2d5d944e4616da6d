#include "hurwitz/detail/expr.hh"

#include <cctype>
#include <limits>
#include <string>

#include "hurwitz/error.hh"

namespace hurwitz::detail {
namespace {

constexpr std::uint64_t kMaxDegree = std::uint64_t(1) << 40;
constexpr std::uint64_t kMaxGeneralPower = 256;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint32_t p)
{
  return static_cast<std::uint64_t>((unsigned __int128)a * b % p);
}

void add_term(Expr& out, std::pair<std::uint64_t, std::uint64_t> key, std::uint64_t c)
{
  c %= out.p;
  if (c == 0) return;
  auto [it, inserted] = out.terms.emplace(key, c);
  if (!inserted) {
    it->second = (it->second + c) % out.p;
    if (it->second == 0) out.terms.erase(it);
  }
}

class Reader {
public:
  Reader(std::string_view text, std::uint32_t p, char outer, char inner)
      : text_(text), p_(p), outer_(outer), inner_(inner)
  {
  }

  Expr run()
  {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const
  {
    throw Error(ErrorKind::ParseError,
                what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c)
  {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr constant(std::uint64_t c)
  {
    Expr e{p_, {}};
    add_term(e, {0, 0}, c);
    return e;
  }

  Expr negate(Expr e)
  {
    for (auto& [k, c] : e.terms) c = (p_ - c) % p_;
    return e;
  }

  Expr sum(Expr a, const Expr& b)
  {
    for (const auto& [k, c] : b.terms) add_term(a, k, c);
    return a;
  }

  Expr product(const Expr& a, const Expr& b)
  {
    Expr out{p_, {}};
    for (const auto& [ka, ca] : a.terms) {
      for (const auto& [kb, cb] : b.terms) {
        if (ka.first > kMaxDegree - kb.first || ka.second > kMaxDegree - kb.second)
          fail("degree too large");
        add_term(out, {ka.first + kb.first, ka.second + kb.second}, mul_mod(ca, cb, p_));
      }
    }
    return out;
  }

  std::uint64_t number()
  {
    skip_ws();
    std::size_t start = pos_;
    unsigned __int128 v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > std::numeric_limits<std::uint64_t>::max()) fail("integer too large");
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return static_cast<std::uint64_t>(v);
  }

  Expr expr()
  {
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    Expr e = term();
    if (negative) e = negate(std::move(e));
    for (;;) {
      if (accept('+')) e = sum(std::move(e), term());
      else if (accept('-')) e = sum(std::move(e), negate(term()));
      else return e;
    }
  }

  Expr term()
  {
    Expr e = factor();
    while (accept('*')) e = product(e, factor());
    return e;
  }

  Expr factor()
  {
    Expr base = atom();
    if (!accept('^')) return base;
    std::uint64_t k = number();
    if (base.terms.size() == 1) {
      auto [key, c] = *base.terms.begin();
      if ((key.first && k > kMaxDegree / key.first) || (key.second && k > kMaxDegree / key.second))
        fail("degree too large");
      std::uint64_t ck = 1 % p_, b = c;
      for (std::uint64_t n = k; n; n >>= 1, b = mul_mod(b, b, p_))
        if (n & 1) ck = mul_mod(ck, b, p_);
      Expr out{p_, {}};
      add_term(out, {key.first * k, key.second * k}, ck);
      return out;
    }
    if (k > kMaxGeneralPower) fail("exponent too large for a compound base");
    Expr out = constant(1);
    for (std::uint64_t i = 0; i < k; ++i) out = product(out, base);
    return out;
  }

  Expr atom()
  {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(number() % p_);
    if (c != '\0' && (c == outer_ || c == inner_)) {
      ++pos_;
      Expr e{p_, {}};
      add_term(e, c == outer_ ? std::pair<std::uint64_t, std::uint64_t>{1, 0}
                              : std::pair<std::uint64_t, std::uint64_t>{0, 1},
               1);
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t p_;
  char outer_;
  char inner_;
};

} // namespace

Expr parse_expr(std::string_view text, std::uint32_t p, char outer, char inner)
{
  return Reader(text, p, outer, inner).run();
}

} // namespace hurwitz::detail
