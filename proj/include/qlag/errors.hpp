#pragma once

#include <stdexcept>
#include <string>

namespace qlag {

/// Base of every domain error raised by the library. The CLI maps these
/// to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QLAG_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

QLAG_DEFINE_ERROR(DivisionByZero);
QLAG_DEFINE_ERROR(NotDivisible);
QLAG_DEFINE_ERROR(PoleAtZero);
QLAG_DEFINE_ERROR(PoleAtSample);
QLAG_DEFINE_ERROR(NegativeIndex);
QLAG_DEFINE_ERROR(NonUnitReciprocal);
QLAG_DEFINE_ERROR(NotPolynomial);
QLAG_DEFINE_ERROR(TableTooShort);
QLAG_DEFINE_ERROR(CapExceeded);
QLAG_DEFINE_ERROR(SizeMismatch);
QLAG_DEFINE_ERROR(NotInDomain);
QLAG_DEFINE_ERROR(InvalidArgument);
QLAG_DEFINE_ERROR(ParseError);

#undef QLAG_DEFINE_ERROR

}  // namespace qlag
