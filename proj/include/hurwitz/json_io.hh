#ifndef HURWITZ_JSON_IO_HH
#define HURWITZ_JSON_IO_HH

#include "json.hpp"

#include "hurwitz/appell.hh"

namespace hurwitz {

using Json = nlohmann::ordered_json;

// {"num": "<poly>", "den": "<poly>"}
Json ratfunc_to_json(const RatFunc& v);
RatFunc ratfunc_from_json(const Json& j, const FieldSpec& spec);

// {"order": N, "coeffs": ["<ratfunc>", ...]}
Json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const Json& j, const FieldSpec& spec);

// {"family", "r", "ell", "n", "method", "num", "den"}; `method` is passed as
// text so reference columns can share the record shape.
Json record_to_json(Family family, std::uint64_t r, std::uint64_t ell, std::uint64_t n, std::string_view method,
                    const RatFunc& value);

} // namespace hurwitz

#endif // HURWITZ_JSON_IO_HH
