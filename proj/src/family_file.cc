#include "hurwitz/family_file.hh"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "hurwitz/detail/expr.hh"

namespace hurwitz {
namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> to_uint(std::string_view s)
{
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& what)
{
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

} // namespace

FieldSpec field_from_parts(std::uint64_t p, int e, std::string_view modulus)
{
  modulus = trim(modulus);
  if (modulus.empty()) return FieldSpec::make(p, e);
  if (!is_prime(p) || p > (std::uint64_t(1) << 31)) return FieldSpec::make(p, e); // reports the characteristic
  auto expr = detail::parse_expr(modulus, std::uint32_t(p), 'x', '\0');
  std::vector<std::uint64_t> coeffs;
  for (const auto& [key, c] : expr.terms) {
    if (key.first > 64) throw Error(ErrorKind::ModulusDegreeMismatch, "modulus degree too large");
    if (coeffs.size() <= key.first) coeffs.resize(key.first + 1, 0);
    coeffs[key.first] = c;
  }
  return FieldSpec::make(p, e, coeffs);
}

FieldSpec parse_field_header(std::string_view text)
{
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 1 && parts.size() != 3)
    throw Error(ErrorKind::ParseError, "field must be \"p\" or \"p,e,modulus\", got \"" + std::string(text) + "\"");
  auto p = to_uint(parts[0]);
  if (!p) throw Error(ErrorKind::ParseError, "bad characteristic \"" + std::string(parts[0]) + "\"");
  if (parts.size() == 1) return FieldSpec::make(*p);
  auto e = to_uint(parts[1]);
  if (!e || *e == 0 || *e > 64) throw Error(ErrorKind::ParseError, "bad extension degree \"" + std::string(parts[1]) + "\"");
  return field_from_parts(*p, int(*e), parts[2]);
}

AppellFamily parse_family_text(std::string_view text)
{
  std::optional<FieldSpec> spec;
  std::optional<std::size_t> order;
  Family label = Family::Custom;
  std::vector<std::pair<std::size_t, RatFunc>> terms;
  std::vector<std::size_t> term_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail_line(line_no, "expected \"key: value\"");
    std::string_view key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
    try {
      if (key == "field") {
        if (spec) fail_line(line_no, "field declared twice");
        spec = parse_field_header(value);
      } else if (key == "order") {
        if (order) fail_line(line_no, "order declared twice");
        auto n = to_uint(value);
        if (!n || *n == 0 || *n > 100000) fail_line(line_no, "bad order \"" + std::string(value) + "\"");
        order = std::size_t(*n);
      } else if (key == "label") {
        if (value == "bernoulli-carlitz") label = Family::BernoulliCarlitz;
        else if (value == "cauchy-carlitz") label = Family::CauchyCarlitz;
        else if (value == "custom") label = Family::Custom;
        else fail_line(line_no, "unknown label \"" + std::string(value) + "\"");
      } else {
        auto n = to_uint(key);
        if (!n) fail_line(line_no, "unknown key \"" + std::string(key) + "\"");
        if (!spec || !order) fail_line(line_no, "\"field:\" and \"order:\" must precede coefficient lines");
        if (*n >= *order)
          fail_line(line_no, "exponent " + std::to_string(*n) + " is not below the order " + std::to_string(*order));
        for (std::size_t i = 0; i < terms.size(); ++i)
          if (terms[i].first == *n)
            fail_line(line_no, "exponent " + std::to_string(*n) + " already given on line " + std::to_string(term_lines[i]));
        terms.emplace_back(std::size_t(*n), RatFunc::parse(value, *spec));
        term_lines.push_back(line_no);
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError && e.detail().rfind("line ", 0) == 0) throw;
      fail_line(line_no, std::string(e.what()));
    }
  }
  if (!spec) throw Error(ErrorKind::ParseError, "missing \"field:\" header");
  if (!order) throw Error(ErrorKind::ParseError, "missing \"order:\" header");
  bool has_zero = false;
  for (const auto& t : terms) has_zero |= t.first == 0;
  if (!has_zero) throw Error(ErrorKind::NormalizationError, "no \"0:\" line; lambda_0 must be 1");
  return AppellFamily::custom(TruncSeries::from_sparse(*spec, *order, terms), label);
}

AppellFamily parse_family_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read family file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family_text(ss.str());
}

std::string format_family(const AppellFamily& fam)
{
  const FieldSpec& f = fam.spec();
  std::string out = "field: " + std::to_string(f.p());
  if (!f.is_prime_field()) {
    out += "," + std::to_string(f.e()) + ",";
    std::vector<Code> m(f.modulus().begin(), f.modulus().end());
    std::string mod = Poly(FieldSpec::make(f.p()), m).to_string();
    for (auto& ch : mod)
      if (ch == 'T') ch = 'x';
    out += mod;
  }
  out += "\norder: " + std::to_string(fam.order()) + "\n";
  if (fam.label() != Family::Custom) out += "label: " + std::string(family_name(fam.label())) + "\n";
  for (std::size_t n = 0; n < fam.order(); ++n)
    if (!fam.lambda().coeffs()[n].is_zero()) out += std::to_string(n) + ": " + fam.lambda().coeffs()[n].to_string() + "\n";
  return out;
}

} // namespace hurwitz
