#pragma once

#include <string>

#include "bernlab/functions.hpp"
#include "bernlab/numerics.hpp"

namespace bernlab {

/// Which closed form produced a constant.
enum class Provenance {
  l1_series,             // p = 1, beta = 0: alternating series
  l2_real,               // p = 2, beta = 0
  l2_complex,            // p = 2, any beta
  linf_log_oscillation,  // p = inf, alpha = 0, beta != 0
  none,
};

std::string to_string(Provenance provenance);

struct BernsteinConstant {
  double value = 0.0;
  PNorm p = PNorm::infinity();
  double alpha = 0.0;
  double beta = 0.0;
  Provenance provenance = Provenance::none;
  int series_terms_used = 0;
  double tolerance = 0.0;
  std::string note;
};

/// Largest |beta| accepted by the p = 2 formula before sinh and Gamma leave
/// double range.
inline constexpr double kMaxL2Beta = 40.0;

/// A_1(|x|^alpha)_1 = 8 |sin(alpha pi / 2)| Gamma(alpha + 1) / pi
///   * sum_k (-1)^k / (2k + 1)^(alpha + 2), alpha > -1.
BernsteinConstant bernstein_l1(double alpha);

/// A_1(|x|^(alpha + i beta))_2 = 2 |sin((alpha + i beta) pi / 2) Gamma(alpha + i beta + 1)|
///   / sqrt(pi (2 alpha + 1)), alpha > -1/2, |beta| <= 40.
BernsteinConstant bernstein_l2(double alpha, double beta);

/// The beta = 0 case written with real functions only.
BernsteinConstant bernstein_l2_real(double alpha);

/// A_sigma(|x|^(i beta))_inf = 1 for each variant, beta != 0, sigma > 0. The
/// best entire approximant is the zero function.
BernsteinConstant bernstein_linf_log(double beta, double sigma, Variant variant = Variant::full);

/// Left minus right side of sqrt(x^2 + 1) / x = log(sqrt(x^2 + 1) + x).
double mu_equation(double x);

/// Positive root of mu_equation (1.508879...), bracketed in [1, 2].
/// tol must lie in (0, 1e-6].
double mu_constant(double tol = 1e-12);

/// sum_{k>=0} (-1)^k / (2k + 1)^s by direct summation of a head and an Euler
/// transform of the tail. Reports the number of terms used.
double alternating_odd_series(double s, double tol, int* terms_used = nullptr);

}  // namespace bernlab
