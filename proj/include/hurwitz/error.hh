#ifndef HURWITZ_ERROR_HH
#define HURWITZ_ERROR_HH

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleModulus,
  ModulusDegreeMismatch,
  NonMonicModulus,
  FieldTooLarge,
  DivisionByZero,
  MixedFields,
  BothZero,
  ExponentOverflow,
  NonUnitConstantTerm,
  InnerConstantNonzero,
  OrderUnderflow,
  IndexTooLarge,
  IndexTooLargeForLiteralEnumeration,
  ParseError,
  NormalizationError,
};

std::string_view error_name(ErrorKind kind);

// Every failure raised by the library. what() reads "<ErrorName>: <detail>".
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::string detail_;
};

} // namespace hurwitz

#endif // HURWITZ_ERROR_HH
