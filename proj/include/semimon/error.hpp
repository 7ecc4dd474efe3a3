#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semimon {

enum class ErrorKind {
  NotSublattice,
  NotPointed,
  NotInCone,
  NotPositive,
  ZeroGenerator,
  DegenerateFace,
  OutOfRange,
  NotUpClosed,
  BadFilter,
  TooLarge,
  HypothesisUnverified,
  NotCM,
  VerificationFailed,
  InvariantViolated,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure the library reports carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace semimon
