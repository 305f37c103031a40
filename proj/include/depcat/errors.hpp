#pragma once

#include <stdexcept>
#include <string>

namespace depcat {

// Base for all typed errors. Input/shape problems map to CLI exit code 2;
// law failures are reports, never exceptions.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define DEPCAT_ERROR(Name) \
  struct Name : Error {    \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

DEPCAT_ERROR(UnknownObject);
DEPCAT_ERROR(UnknownArrow);
DEPCAT_ERROR(NotComposable);
DEPCAT_ERROR(NoTerminalObject);
DEPCAT_ERROR(NotACospan);
DEPCAT_ERROR(IllTypedSquare);
DEPCAT_ERROR(NonCommutingCone);
DEPCAT_ERROR(TypeMismatch);
DEPCAT_ERROR(MissingProduct);
DEPCAT_ERROR(MissingPullback);
DEPCAT_ERROR(NoSubobjectClassifier);
DEPCAT_ERROR(NotARing);
DEPCAT_ERROR(NotEqualElements);
DEPCAT_ERROR(PullbackMediatorMissing);
DEPCAT_ERROR(BudgetExceeded);
DEPCAT_ERROR(InvalidSpec);
DEPCAT_ERROR(ParseError);
DEPCAT_ERROR(IntegrityError);
DEPCAT_ERROR(LayerMissing);

#undef DEPCAT_ERROR

}  // namespace depcat
