#pragma once

#include <stdexcept>
#include <string>

namespace rp2 {

enum class Errc {
  zero_vector,
  coincident_arguments,
  singular_transform,
  not_positive_hyperbolic,
  point_not_on_conic,
  degenerate_conic,
  at_infinity,
  endpoints_not_on_conic,
  witness_on_wrong_component,
  degenerate_cartan,
  integer_overflow,
  pole_on_chord,
  invalid_lamination,
  not_conic_preserving,
  orbit_self_crossing,
  axis_mismatch,
  too_few_samples,
  invalid_argument,
  io_failure,
  numeric_failure,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::zero_vector: return "ZeroVector";
    case Errc::coincident_arguments: return "CoincidentArguments";
    case Errc::singular_transform: return "SingularTransform";
    case Errc::not_positive_hyperbolic: return "NotPositiveHyperbolic";
    case Errc::point_not_on_conic: return "PointNotOnConic";
    case Errc::degenerate_conic: return "DegenerateConic";
    case Errc::at_infinity: return "AtInfinity";
    case Errc::endpoints_not_on_conic: return "EndpointsNotOnConic";
    case Errc::witness_on_wrong_component: return "WitnessOnWrongComponent";
    case Errc::degenerate_cartan: return "DegenerateCartan";
    case Errc::integer_overflow: return "IntegerOverflow";
    case Errc::pole_on_chord: return "PoleOnChord";
    case Errc::invalid_lamination: return "InvalidLamination";
    case Errc::not_conic_preserving: return "NotConicPreserving";
    case Errc::orbit_self_crossing: return "OrbitSelfCrossing";
    case Errc::axis_mismatch: return "AxisMismatch";
    case Errc::too_few_samples: return "TooFewSamples";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io_failure: return "IoFailure";
    case Errc::numeric_failure: return "NumericFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace rp2
