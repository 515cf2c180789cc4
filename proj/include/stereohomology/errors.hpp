#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stereo {

enum class ErrorCode {
  InvalidElement,
  DegenerateNormal,
  SkewLines,
  CoincidentLines,
  SingularMatrix,
  InvalidTransform,
  CenterOnHyperplane,
  CenterOffHyperplane,
  ZeroLambda,
  ZeroMu,
  IrrationalNormalizer,
  SpecViolation,
  NotStereohomology,
  IdentityAmbiguous,
  InvalidConfiguration,
  SingularDelta,
  SingularSystem,
  NotElementary,
  DegenerateSample,
  ParallelPlanes,
  IdealPlane,
  ZeroDirection,
};

std::string_view error_name(ErrorCode code);

/// Domain failure raised by every library operation. The code is stable and
/// serialized by name; `row` is set only for SpecViolation.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& detail,
                std::optional<int> row = std::nullopt)
      : std::runtime_error(detail), code_(code), row_(row) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  std::optional<int> row() const noexcept { return row_; }

 private:
  ErrorCode code_;
  std::optional<int> row_;
};

}  // namespace stereo
