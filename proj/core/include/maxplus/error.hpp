#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maxplus {

/// Failure categories shared by the finite and LQ modules. The CLI maps each
/// category onto an exit status, so keep `is_assumption_violation` in sync.
enum class Errc {
  InvalidArgument,
  ParseError,
  DimensionMismatch,
  NoCycle,
  PositiveCycle,
  AssumptionViolated,
  NotHarmonic,
  NotNormalized,
  HMinusInfinityAtStart,
  NotAlmostGeodesic,
  NotEventuallyConstant,
  LimitNotMinimal,
  NonpositiveHorizon,
  BothEndpointsZeroWithLambdaZero,
  NonpositiveLambda,
  NonUnitDirection,
  GridTooSmall,
  GradientSingularity,
  EmptyContour,
};

std::string_view to_string(Errc code) noexcept;

/// True for errors that report a violated mathematical hypothesis rather than
/// malformed input.
bool is_assumption_violation(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace maxplus
