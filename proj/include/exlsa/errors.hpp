#pragma once

#include <stdexcept>
#include <string>

namespace exlsa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define EXLSA_DECLARE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

EXLSA_DECLARE_ERROR(DivisionByZero);
EXLSA_DECLARE_ERROR(DenominatorVanishes);
EXLSA_DECLARE_ERROR(SingularMatrix);
EXLSA_DECLARE_ERROR(ParseError);
EXLSA_DECLARE_ERROR(DegreeMismatch);
EXLSA_DECLARE_ERROR(ArityMismatch);
EXLSA_DECLARE_ERROR(ShapeMismatch);
EXLSA_DECLARE_ERROR(SingularPairing);
EXLSA_DECLARE_ERROR(DegenerateParameter);
EXLSA_DECLARE_ERROR(NotImaginary);
EXLSA_DECLARE_ERROR(BadGenerators);
EXLSA_DECLARE_ERROR(WrongDimension);
EXLSA_DECLARE_ERROR(ZeroParameter);
EXLSA_DECLARE_ERROR(NotSpecial);
EXLSA_DECLARE_ERROR(UnknownSuite);
EXLSA_DECLARE_ERROR(InvariantViolation);
EXLSA_DECLARE_ERROR(IOError);

#undef EXLSA_DECLARE_ERROR

} // namespace exlsa
