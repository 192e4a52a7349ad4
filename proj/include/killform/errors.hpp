#pragma once

#include <stdexcept>
#include <string>

namespace killform {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KILLFORM_ERROR(Name)                 \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  };

KILLFORM_ERROR(CapExceeded)
KILLFORM_ERROR(DegreeMismatch)
KILLFORM_ERROR(UnknownSpec)
KILLFORM_ERROR(BadField)
KILLFORM_ERROR(ElementNotInGroup)
KILLFORM_ERROR(ParseError)
KILLFORM_ERROR(SingularMatrix)
KILLFORM_ERROR(SeparationFailure)
KILLFORM_ERROR(RowSumMismatch)
KILLFORM_ERROR(NotCentral)
KILLFORM_ERROR(ZeroMultiplicity)
KILLFORM_ERROR(NoSuitablePrime)
KILLFORM_ERROR(OrthogonalityFailure)
KILLFORM_ERROR(NotACharacter)
KILLFORM_ERROR(NontrivialCentre)
KILLFORM_ERROR(ProjectorMismatch)
KILLFORM_ERROR(NotAnEigenvector)

#undef KILLFORM_ERROR

}  // namespace killform
