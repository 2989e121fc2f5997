#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsplacto {

enum class ErrorCode {
  UnsupportedType,
  IndexOutOfRange,
  NonDominantWeight,
  IntegralityViolation,
  FactorBoundaryViolation,
  NonHighestSeed,
  UnknownGenerator,
  BudgetExceeded,
  LetterOutOfRange,
  InvalidData,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module of the library.  The code lets
/// callers (the CLI in particular) map failures without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace lsplacto
