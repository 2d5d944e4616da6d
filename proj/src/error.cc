#include "hurwitz/error.hh"

namespace hurwitz {

std::string_view error_name(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
  case ErrorKind::ReducibleModulus: return "ReducibleModulus";
  case ErrorKind::ModulusDegreeMismatch: return "ModulusDegreeMismatch";
  case ErrorKind::NonMonicModulus: return "NonMonicModulus";
  case ErrorKind::FieldTooLarge: return "FieldTooLarge";
  case ErrorKind::DivisionByZero: return "DivisionByZero";
  case ErrorKind::MixedFields: return "MixedFields";
  case ErrorKind::BothZero: return "BothZero";
  case ErrorKind::ExponentOverflow: return "ExponentOverflow";
  case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
  case ErrorKind::InnerConstantNonzero: return "InnerConstantNonzero";
  case ErrorKind::OrderUnderflow: return "OrderUnderflow";
  case ErrorKind::IndexTooLarge: return "IndexTooLarge";
  case ErrorKind::IndexTooLargeForLiteralEnumeration: return "IndexTooLargeForLiteralEnumeration";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::NormalizationError: return "NormalizationError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
      kind_(kind), detail_(detail)
{
}

} // namespace hurwitz
