#include "maxplus/error.hpp"

namespace maxplus {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NoCycle: return "NoCycle";
    case Errc::PositiveCycle: return "PositiveCycle";
    case Errc::AssumptionViolated: return "AssumptionViolated";
    case Errc::NotHarmonic: return "NotHarmonic";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::HMinusInfinityAtStart: return "HMinusInfinityAtStart";
    case Errc::NotAlmostGeodesic: return "NotAlmostGeodesic";
    case Errc::NotEventuallyConstant: return "NotEventuallyConstant";
    case Errc::LimitNotMinimal: return "LimitNotMinimal";
    case Errc::NonpositiveHorizon: return "NonpositiveHorizon";
    case Errc::BothEndpointsZeroWithLambdaZero: return "BothEndpointsZeroWithLambdaZero";
    case Errc::NonpositiveLambda: return "NonpositiveLambda";
    case Errc::NonUnitDirection: return "NonUnitDirection";
    case Errc::GridTooSmall: return "GridTooSmall";
    case Errc::GradientSingularity: return "GradientSingularity";
    case Errc::EmptyContour: return "EmptyContour";
  }
  return "Unknown";
}

bool is_assumption_violation(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::ParseError:
    case Errc::DimensionMismatch:
    case Errc::NonpositiveHorizon:
    case Errc::BothEndpointsZeroWithLambdaZero:
    case Errc::NonpositiveLambda:
    case Errc::NonUnitDirection:
      return false;
    default:
      return true;
  }
}

}  // namespace maxplus
