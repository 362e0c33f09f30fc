#include "dal/error.hpp"

namespace dal {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NonUniqueSteadyState: return "NonUniqueSteadyState";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::ZeroTrace: return "ZeroTrace";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::BracketInvalid: return "BracketInvalid";
  }
  return "Unknown";
}

}  // namespace dal
