#include "bernlab/error.hpp"

namespace bernlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "DomainError";
    case ErrorKind::non_finite: return "NonFinite";
    case ErrorKind::grid: return "GridError";
    case ErrorKind::pole: return "PoleError";
    case ErrorKind::no_bracket: return "NoBracket";
    case ErrorKind::degree_too_large: return "DegreeTooLarge";
    case ErrorKind::lp_infeasible: return "LPInfeasible";
    case ErrorKind::quadrature: return "QuadratureError";
    case ErrorKind::unsupported_exponent: return "UnsupportedExponent";
    case ErrorKind::overflow: return "Overflow";
    case ErrorKind::unstable: return "Unstable";
  }
  return "Unknown";
}

bool is_usage_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain:
    case ErrorKind::grid:
    case ErrorKind::pole:
    case ErrorKind::degree_too_large:
    case ErrorKind::unsupported_exponent:
    case ErrorKind::overflow:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace bernlab
