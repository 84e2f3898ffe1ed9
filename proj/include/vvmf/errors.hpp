#pragma once

#include <stdexcept>
#include <string>

namespace vvmf {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define VVMF_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

VVMF_DEFINE_ERROR(ParseError);
VVMF_DEFINE_ERROR(ArithmeticOverflow);
VVMF_DEFINE_ERROR(LevelTooLarge);
VVMF_DEFINE_ERROR(DomainMismatch);
VVMF_DEFINE_ERROR(NotAdmissible);
VVMF_DEFINE_ERROR(NotNormal);
VVMF_DEFINE_ERROR(NotHomomorphism);
VVMF_DEFINE_ERROR(NotTransversal);
VVMF_DEFINE_ERROR(NoCharacterLift);
VVMF_DEFINE_ERROR(OracleMismatch);
VVMF_DEFINE_ERROR(PrecisionLoss);
VVMF_DEFINE_ERROR(NotInduced);
VVMF_DEFINE_ERROR(UnsupportedAmbientGroup);
VVMF_DEFINE_ERROR(NotSeparating);
VVMF_DEFINE_ERROR(KernelOutOfScope);
VVMF_DEFINE_ERROR(LengthMismatch);

#undef VVMF_DEFINE_ERROR

}  // namespace vvmf
