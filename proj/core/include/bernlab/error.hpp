#pragma once

#include <stdexcept>
#include <string>

namespace bernlab {

enum class ErrorKind {
  domain,
  non_finite,
  grid,
  pole,
  no_bracket,
  degree_too_large,
  lp_infeasible,
  quadrature,
  unsupported_exponent,
  overflow,
  unstable,
};

const char* to_string(ErrorKind kind) noexcept;

// Usage errors are caused by the caller's arguments (bad exponent, pole,
// out-of-range parameter); the rest signal a numerical failure.
bool is_usage_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace bernlab
