#include "hurwitz/json_io.hh"

#include <string>

namespace hurwitz {

Json ratfunc_to_json(const RatFunc& v)
{
  Json j;
  j["num"] = v.num().to_string();
  j["den"] = v.den().to_string();
  return j;
}

RatFunc ratfunc_from_json(const Json& j, const FieldSpec& spec)
{
  try {
    Poly num = Poly::parse(j.at("num").get<std::string>(), spec);
    Poly den = Poly::parse(j.at("den").get<std::string>(), spec);
    return rf_normalize(num, den);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("rational function record: ") + e.what());
  }
}

Json series_to_json(const TruncSeries& s)
{
  Json j;
  j["order"] = s.order();
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
  j["coeffs"] = std::move(coeffs);
  return j;
}

TruncSeries series_from_json(const Json& j, const FieldSpec& spec)
{
  try {
    const auto order = j.at("order").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != order) throw Error(ErrorKind::ParseError, "series coefficient count differs from its order");
    std::vector<RatFunc> out;
    for (const auto& c : coeffs) out.push_back(RatFunc::parse(c.get<std::string>(), spec));
    return TruncSeries(std::move(out), spec);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("series record: ") + e.what());
  }
}

Json record_to_json(Family family, std::uint64_t r, std::uint64_t ell, std::uint64_t n, std::string_view method,
                    const RatFunc& value)
{
  Json j;
  j["family"] = std::string(family_name(family));
  j["r"] = r;
  j["ell"] = ell;
  j["n"] = n;
  j["method"] = std::string(method);
  j["num"] = value.num().to_string();
  j["den"] = value.den().to_string();
  return j;
}

} // namespace hurwitz
