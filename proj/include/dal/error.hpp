#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dal {

enum class ErrorKind {
  NotHermitian,
  ConvergenceFailure,
  Overflow,
  DimensionMismatch,
  InvalidState,
  InvalidParams,
  NonUniqueSteadyState,
  NotPositive,
  ZeroTrace,
  EmptySelection,
  IndexOutOfRange,
  NotConverged,
  BracketInvalid,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI and the Python bindings can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dal
