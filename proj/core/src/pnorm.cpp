#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "bernlab/error.hpp"
#include "bernlab/numerics.hpp"

namespace bernlab {

Interval symmetric_interval(double half_width) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    raise(ErrorKind::domain, "interval half-width must be positive and finite");
  }
  return {-half_width, half_width};
}

PNorm::PNorm(double p) : p_(p) {
  if (std::isnan(p)) raise(ErrorKind::domain, "p must be a number");
  if (p < 1.0) raise(ErrorKind::unsupported_exponent, "p < 1 unsupported");
}

PNorm PNorm::infinity() { return PNorm(std::numeric_limits<double>::infinity()); }

double PNorm::p_tilde() const noexcept { return std::min(1.0, p_); }

bool PNorm::is_infinite() const noexcept { return std::isinf(p_); }

double PNorm::inverse() const noexcept { return is_infinite() ? 0.0 : 1.0 / p_; }

std::string PNorm::label() const {
  if (is_infinite()) return "inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p_);
  return std::string(buf, end);
}

PNorm parse_pnorm(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return PNorm::infinity();
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    raise(ErrorKind::domain, "cannot parse p from '" + std::string(text) + "'");
  }
  return PNorm(value);
}

}  // namespace bernlab
