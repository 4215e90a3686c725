#pragma once

#include <stdexcept>
#include <string>

namespace sobolev {

/// Base class of every error raised by the library. `kind()` is a stable
/// machine-readable tag that ends up in run reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SOBOLEV_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

// interval kernel
SOBOLEV_DEFINE_ERROR(DomainError)
SOBOLEV_DEFINE_ERROR(DivisionByZeroInterval)
SOBOLEV_DEFINE_ERROR(OverflowError)
// series
SOBOLEV_DEFINE_ERROR(CapacityError)
SOBOLEV_DEFINE_ERROR(QuadratureError)
// solver
SOBOLEV_DEFINE_ERROR(NoConvergence)
SOBOLEV_DEFINE_ERROR(SingularJacobian)
// certifier
SOBOLEV_DEFINE_ERROR(GapFailure)
SOBOLEV_DEFINE_ERROR(NotInvertible)
SOBOLEV_DEFINE_ERROR(ConditionFailure)
// enclosure
SOBOLEV_DEFINE_ERROR(HypothesisFailure)
SOBOLEV_DEFINE_ERROR(CertificateMissing)
SOBOLEV_DEFINE_ERROR(SoundnessViolation)
// io
SOBOLEV_DEFINE_ERROR(FormatError)
SOBOLEV_DEFINE_ERROR(IOError)

#undef SOBOLEV_DEFINE_ERROR

}  // namespace sobolev
