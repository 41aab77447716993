#pragma once
#include <stdexcept>
#include <string>

namespace mordell {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct SingularCurve : Error { using Error::Error; };
struct PointNotOnCurve : Error { using Error::Error; };
struct BadReductionPrime : Error { using Error::Error; };
struct GuardExceeded : Error { using Error::Error; };
struct ConstantPolynomial : Error { using Error::Error; };
struct NonpositiveGeneratorHeight : Error { using Error::Error; };
struct InvalidDimension : Error { using Error::Error; };
struct DegenerateFamily : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct DegreeOrderViolation : Error { using Error::Error; };
struct HypothesisFailed : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct StabilityNotReached : Error { using Error::Error; };
struct TorsionUncertified : Error { using Error::Error; };

}  // namespace mordell
