#include "bernlab/functions.hpp"

#include <cmath>
#include <sstream>

#include "bernlab/error.hpp"

namespace bernlab {

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::full: return "full";
    case Variant::cos_part: return "cos";
    case Variant::sin_part: return "sin";
  }
  return "full";
}

Variant parse_variant(std::string_view text) {
  if (text == "full") return Variant::full;
  if (text == "cos" || text == "cos_part") return Variant::cos_part;
  if (text == "sin" || text == "sin_part") return Variant::sin_part;
  raise(ErrorKind::domain, "unknown variant '" + std::string(text) + "' (expected full, cos or sin)");
}

FunctionSpec::FunctionSpec(double alpha, double beta, Variant variant)
    : FunctionSpec(alpha, beta, variant, HalflineWeights{}) {}

FunctionSpec::FunctionSpec(double alpha, double beta, Variant variant, HalflineWeights weights)
    : alpha_(alpha), beta_(beta), variant_(variant), weights_(weights) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    raise(ErrorKind::domain, "alpha and beta must be finite");
  }
  if (!(alpha > -1.0)) {
    raise(ErrorKind::domain, "alpha must exceed -1");
  }
  if (std::abs(weights.positive) + std::abs(weights.negative) == 0.0) {
    raise(ErrorKind::domain, "half-line weights must not both vanish");
  }
}

bool FunctionSpec::has_unit_weights() const noexcept {
  return weights_.positive == std::complex<double>(1.0, 0.0) &&
         weights_.negative == std::complex<double>(1.0, 0.0);
}

bool FunctionSpec::is_even() const noexcept { return weights_.positive == weights_.negative; }

bool FunctionSpec::is_real_valued() const noexcept {
  if (variant_ != Variant::full) return true;
  return beta_ == 0.0 && weights_.positive.imag() == 0.0 && weights_.negative.imag() == 0.0;
}

bool FunctionSpec::is_polynomial() const noexcept {
  if (beta_ != 0.0 || !is_even()) return false;
  if (variant_ == Variant::sin_part && weights_.positive.imag() == 0.0) return true;  // identically 0
  return alpha_ >= 0.0 && std::fmod(alpha_, 2.0) == 0.0;
}

std::complex<double> FunctionSpec::operator()(double x) const {
  if (x == 0.0) {
    if (alpha_ > 0.0) return {0.0, 0.0};
    raise(ErrorKind::domain, "f has no value at x = 0 when alpha <= 0");
  }
  if (!std::isfinite(x)) {
    raise(ErrorKind::domain, "x must be finite");
  }
  const double ax = std::abs(x);
  const double modulus = std::pow(ax, alpha_);
  const double phase = beta_ * std::log(ax);
  std::complex<double> value = beta_ == 0.0 ? std::complex<double>(modulus, 0.0)
                                             : std::polar(modulus, phase);
  value *= x > 0.0 ? weights_.positive : weights_.negative;
  switch (variant_) {
    case Variant::full: return value;
    case Variant::cos_part: return {value.real(), 0.0};
    case Variant::sin_part: return {value.imag(), 0.0};
  }
  return value;
}

std::string FunctionSpec::describe() const {
  std::ostringstream out;
  out << "alpha=" << alpha_ << " beta=" << beta_ << " variant=" << to_string(variant_);
  if (!has_unit_weights()) {
    out << " weights=(" << weights_.positive << "," << weights_.negative << ")";
  }
  return out.str();
}

std::complex<double> eval_function(const FunctionSpec& spec, double x) { return spec(x); }

Dilation dilate(const FunctionSpec& spec, double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    raise(ErrorKind::domain, "dilation factor must be positive and finite");
  }
  Dilation out;
  out.factor.scale = eta;
  out.factor.modulus_factor = std::pow(eta, spec.alpha());
  out.factor.rotation = spec.beta() * std::log(eta);
  const double c = std::cos(out.factor.rotation);
  const double s = std::sin(out.factor.rotation);
  out.mixing = {{{c, -s}, {s, c}}};
  out.full_factor = std::polar(out.factor.modulus_factor, out.factor.rotation);
  return out;
}

}  // namespace bernlab
