#pragma once

#include <stdexcept>
#include <string>

namespace apls {

/// Base of every error raised by the library. Callers that only need a
/// message can catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define APLS_DECLARE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

APLS_DECLARE_ERROR(DegreeExceeded);
APLS_DECLARE_ERROR(NonSimple);
APLS_DECLARE_ERROR(InfeasibleSpec);
APLS_DECLARE_ERROR(FormatError);
APLS_DECLARE_ERROR(NotUniform);
APLS_DECLARE_ERROR(InfeasibleAlpha);
APLS_DECLARE_ERROR(EmptySubgraph);
APLS_DECLARE_ERROR(InvalidDistribution);
APLS_DECLARE_ERROR(AmbiguousColor);
APLS_DECLARE_ERROR(MalformedLabeling);
APLS_DECLARE_ERROR(NotAccepted);
APLS_DECLARE_ERROR(NoQualifyingSet);
APLS_DECLARE_ERROR(WitnessTooRough);
APLS_DECLARE_ERROR(OutOfRange);

#undef APLS_DECLARE_ERROR

}  // namespace apls
