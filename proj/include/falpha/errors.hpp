#pragma once

#include <stdexcept>
#include <string>

namespace falpha {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller-supplied data or parameters are invalid (bad files, malformed
/// distributions, out-of-domain arguments). The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Numeric machinery failed to reach its tolerance or produced an impossible
/// value. The CLI maps these to exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

#define FALPHA_DEFINE_ERROR(NAME, BASE)  \
  class NAME : public BASE {             \
   public:                               \
    using BASE::BASE;                    \
  }

FALPHA_DEFINE_ERROR(NegativeMass, InputError);
FALPHA_DEFINE_ERROR(NotNormalized, InputError);
FALPHA_DEFINE_ERROR(DimensionMismatch, InputError);
FALPHA_DEFINE_ERROR(NonPositiveGamma, InputError);
FALPHA_DEFINE_ERROR(UnsupportedAlpha, InputError);
FALPHA_DEFINE_ERROR(SupportViolation, InputError);
FALPHA_DEFINE_ERROR(GammaViolation, InputError);
FALPHA_DEFINE_ERROR(OutOfRangeT, InputError);
FALPHA_DEFINE_ERROR(NegativeS, InputError);
FALPHA_DEFINE_ERROR(OutOfRange, InputError);
FALPHA_DEFINE_ERROR(SupportsOverlap, InputError);
FALPHA_DEFINE_ERROR(BadGamma, InputError);
FALPHA_DEFINE_ERROR(UnsupportedInputSet, InputError);
FALPHA_DEFINE_ERROR(DegenerateSet, InputError);
FALPHA_DEFINE_ERROR(BadParams, InputError);
FALPHA_DEFINE_ERROR(AlphabetTooLarge, InputError);

FALPHA_DEFINE_ERROR(SolverFailure, NumericError);
FALPHA_DEFINE_ERROR(DpiViolation, NumericError);

#undef FALPHA_DEFINE_ERROR

}  // namespace falpha
