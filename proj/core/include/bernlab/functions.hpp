#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

namespace bernlab {

enum class Variant { full, cos_part, sin_part };

std::string to_string(Variant variant);
Variant parse_variant(std::string_view text);

/// Complex multipliers applied to the x > 0 and x <= 0 branches.
struct HalflineWeights {
  std::complex<double> positive{1.0, 0.0};
  std::complex<double> negative{1.0, 0.0};
};

/// The target family |x|^(alpha + i beta), its real/imaginary parts, and the
/// half-line weighted generalisation a x^(alpha+i beta) (x > 0),
/// b |x|^(alpha+i beta) (x <= 0).
///
/// Values are immutable after construction.
class FunctionSpec {
 public:
  FunctionSpec(double alpha, double beta, Variant variant = Variant::full);
  FunctionSpec(double alpha, double beta, Variant variant, HalflineWeights weights);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  Variant variant() const noexcept { return variant_; }
  const HalflineWeights& weights() const noexcept { return weights_; }

  bool has_unit_weights() const noexcept;
  /// f(-x) == f(x) for every x.
  bool is_even() const noexcept;
  bool is_real_valued() const noexcept;
  /// Even integer power with no log-oscillation: the target is itself a polynomial.
  bool is_polynomial() const noexcept;
  /// The origin is a point where the function has no value.
  bool excludes_origin() const noexcept { return alpha_ <= 0.0; }

  std::complex<double> operator()(double x) const;

  std::string describe() const;

 private:
  double alpha_;
  double beta_;
  Variant variant_;
  HalflineWeights weights_;
};

std::complex<double> eval_function(const FunctionSpec& spec, double x);

struct DilationFactor {
  double scale = 1.0;
  double modulus_factor = 1.0;  // scale^alpha
  double rotation = 0.0;        // beta * log(scale), radians
};

/// f(eta x) = modulus * e^{i rotation} f(x); on the pair (f_c, f_s) the map is
/// modulus * mixing, with mixing = [[cos, -sin], [sin, cos]].
struct Dilation {
  DilationFactor factor;
  std::array<std::array<double, 2>, 2> mixing{};
  std::complex<double> full_factor;
};

Dilation dilate(const FunctionSpec& spec, double eta);

}  // namespace bernlab
