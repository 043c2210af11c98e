#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poncelet {

enum class ErrorCode {
  DegenerateTriangle,
  PointAtInfinity,
  DegenerateConfiguration,
  NotAnEllipse,
  PointInsideEllipse,
  InvalidAxes,
  InvalidLambda,
  VertexInsideCaustic,
  SingularDenominator,
  TooFewValidSamples,
  CollinearSamples,
  DegenerateSamples,
  CollinearPoints,
  NoSecondRealIntersection,
  VerificationFailed,
  InconsistentTangency,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every recoverable failure in the library is reported through this type.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace poncelet
