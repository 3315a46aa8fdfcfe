#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tars {

/// Category of a domain error; serialized by the CLI as a stable string.
enum class ErrorKind {
  DimensionMismatch,
  InvalidArgument,
  NotARoot,
  IsotropicReflection,
  NonIntegral,
  Dependent,
  Overflow,
  Unverified,
  NotConjugate,
  OutOfScope,
  BudgetExceeded,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. Carries a kind so front ends can map
/// it to a machine-readable object without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tars
