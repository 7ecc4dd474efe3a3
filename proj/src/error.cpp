#include "semimon/error.hpp"

namespace semimon {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSublattice: return "NotSublattice";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotInCone: return "NotInCone";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::DegenerateFace: return "DegenerateFace";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotUpClosed: return "NotUpClosed";
    case ErrorKind::BadFilter: return "BadFilter";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::HypothesisUnverified: return "HypothesisUnverified";
    case ErrorKind::NotCM: return "NotCM";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace semimon
