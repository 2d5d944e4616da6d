#ifndef HURWITZ_FAMILY_FILE_HH
#define HURWITZ_FAMILY_FILE_HH

// Custom Appell-Carlitz families as text:
//
//   # lambda coefficients of e_C(z)/z over F_3
//   field: 3
//   order: 8
//   label: bernoulli-carlitz      (optional)
//   0: 1
//   2: 1 / T^3+2*T
//
// "field: p[,e,modulus]" and "order: N" must come before the first
// coefficient line. Absent exponents are zero; lambda_0 must be 1.

#include <filesystem>
#include <string>
#include <string_view>

#include "hurwitz/appell.hh"

namespace hurwitz {

// "p" or "p,e,modulus" (modulus in x over F_p, e.g. "2,2,x^2+x+1").
FieldSpec parse_field_header(std::string_view text);

// Builds a field from separate p, e and modulus text; modulus may be empty when e = 1.
FieldSpec field_from_parts(std::uint64_t p, int e, std::string_view modulus);

// Throws ParseError (message carries the line number) or NormalizationError.
AppellFamily parse_family_text(std::string_view text);
AppellFamily parse_family_file(const std::filesystem::path& path);

// Writes a family back out in the same format.
std::string format_family(const AppellFamily& fam);

} // namespace hurwitz

#endif // HURWITZ_FAMILY_FILE_HH
