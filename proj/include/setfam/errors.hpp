#pragma once

#include <stdexcept>
#include <string>

namespace setfam {

/// Raised when an instance exceeds one of the named size guards. Guards make
/// the exponential searches refuse oversized inputs instead of silently
/// degrading to heuristics.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(std::string guard_name, const std::string& detail)
      : std::runtime_error("guard '" + guard_name + "' exceeded: " + detail),
        guard_(std::move(guard_name)) {}
  const std::string& guard_name() const { return guard_; }

 private:
  std::string guard_;
};

/// Raised when a theorem verifier's stated precondition does not hold on the
/// given instance (distinct from the claim being false).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorCode {
  MalformedJson,
  MissingField,
  OutOfRangeElement,
  DuplicateSet,
  BadGroundSize,
};

/// Structured error for family-file ingestion; each failure mode carries a
/// distinct code.
class FamilyParseError : public std::runtime_error {
 public:
  FamilyParseError(ParseErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}
  ParseErrorCode code() const { return code_; }

 private:
  ParseErrorCode code_;
};

}  // namespace setfam
