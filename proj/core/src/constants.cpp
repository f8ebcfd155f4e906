#include "bernlab/constants.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "bernlab/error.hpp"

namespace bernlab {

namespace {

constexpr int kHeadTerms = 16;
constexpr int kMaxEulerTerms = 120;

}  // namespace

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::l1_series: return "l1_series";
    case Provenance::l2_real: return "l2_real";
    case Provenance::l2_complex: return "l2_complex";
    case Provenance::linf_log_oscillation: return "linf_log_oscillation";
    case Provenance::none: return "none";
  }
  return "none";
}

double alternating_odd_series(double s, double tol, int* terms_used) {
  if (!(tol > 0.0)) raise(ErrorKind::domain, "series tolerance must be positive");
  auto term = [s](int k) { return std::pow(2.0 * k + 1.0, -s); };
  double head = 0.0;
  for (int k = kHeadTerms - 1; k >= 0; --k) head += (k % 2 == 0 ? 1.0 : -1.0) * term(k);

  // Euler transform of sum_{k>=N} (-1)^k a_k = (-1)^N sum_j (-1)^j Delta^j a_N / 2^(j+1).
  std::vector<double> diffs(kMaxEulerTerms + 1);
  for (int i = 0; i <= kMaxEulerTerms; ++i) diffs[i] = term(kHeadTerms + i);
  double tail = 0.0;
  double scale = 0.5;
  int used = kHeadTerms;
  int small_in_a_row = 0;
  for (int j = 0; j <= kMaxEulerTerms; ++j) {
    const double contribution = (j % 2 == 0 ? 1.0 : -1.0) * diffs[0] * scale;
    tail += contribution;
    used = kHeadTerms + j + 1;
    small_in_a_row = std::abs(contribution) < 0.1 * tol ? small_in_a_row + 1 : 0;
    if (small_in_a_row == 2) break;
    for (int i = 0; i + j < kMaxEulerTerms; ++i) diffs[i] = diffs[i + 1] - diffs[i];
    scale *= 0.5;
  }
  if (terms_used != nullptr) *terms_used = used;
  return head + (kHeadTerms % 2 == 0 ? 1.0 : -1.0) * tail;
}

BernsteinConstant bernstein_l1(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) raise(ErrorKind::domain, "bernstein_l1 needs alpha > -1");
  BernsteinConstant c;
  c.p = PNorm(1.0);
  c.alpha = alpha;
  c.provenance = Provenance::l1_series;
  c.tolerance = 1e-13;
  const double series = alternating_odd_series(alpha + 2.0, c.tolerance, &c.series_terms_used);
  c.value = 8.0 * std::abs(sin_pi(0.5 * alpha)) * std::tgamma(alpha + 1.0) / std::numbers::pi * series;
  c.note = "limit of n^(alpha+1) E_n(|x|^alpha, L_1[-1,1])";
  return c;
}

BernsteinConstant bernstein_l2(double alpha, double beta) {
  if (!(alpha > -0.5) || !std::isfinite(alpha)) raise(ErrorKind::domain, "bernstein_l2 needs alpha > -1/2");
  if (!std::isfinite(beta)) raise(ErrorKind::domain, "beta must be finite");
  if (std::abs(beta) > kMaxL2Beta) raise(ErrorKind::domain, "bernstein_l2 needs |beta| <= 40");
  // sin(a + ib) = sin a cosh b + i cos a sinh b with a = alpha pi / 2, b = beta pi / 2.
  const double b = 0.5 * std::numbers::pi * beta;
  const std::complex<double> sine(sin_pi(0.5 * alpha) * std::cosh(b), cos_pi(0.5 * alpha) * std::sinh(b));
  const std::complex<double> gamma = complex_gamma({alpha + 1.0, beta});
  BernsteinConstant c;
  c.p = PNorm(2.0);
  c.alpha = alpha;
  c.beta = beta;
  c.provenance = beta == 0.0 ? Provenance::l2_real : Provenance::l2_complex;
  c.value = 2.0 * std::abs(sine * gamma) / std::sqrt(std::numbers::pi * (2.0 * alpha + 1.0));
  c.tolerance = 1e-12;
  c.note = "limit of n^(alpha+1/2) E_n(|x|^(alpha+i beta), L_2[-1,1])";
  return c;
}

BernsteinConstant bernstein_l2_real(double alpha) {
  if (!(alpha > -0.5) || !std::isfinite(alpha)) raise(ErrorKind::domain, "bernstein_l2 needs alpha > -1/2");
  BernsteinConstant c;
  c.p = PNorm(2.0);
  c.alpha = alpha;
  c.provenance = Provenance::l2_real;
  c.value = 2.0 * std::abs(sin_pi(0.5 * alpha)) * std::tgamma(alpha + 1.0) /
            std::sqrt(std::numbers::pi * (2.0 * alpha + 1.0));
  c.tolerance = 1e-13;
  c.note = "limit of n^(alpha+1/2) E_n(|x|^alpha, L_2[-1,1])";
  return c;
}

BernsteinConstant bernstein_linf_log(double beta, double sigma, Variant variant) {
  if (!std::isfinite(beta) || beta == 0.0) {
    raise(ErrorKind::domain, "bernstein_linf_log needs beta != 0 (beta = 0 gives the constant 1, error 0)");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) raise(ErrorKind::domain, "sigma must be positive");
  BernsteinConstant c;
  c.p = PNorm::infinity();
  c.beta = beta;
  c.provenance = Provenance::linf_log_oscillation;
  c.value = 1.0;
  c.note = "exact for every sigma > 0 and variant " + to_string(variant) +
           "; the best entire approximant of type sigma is the zero function";
  return c;
}

double mu_equation(double x) {
  const double root = std::sqrt(x * x + 1.0);
  return root / x - std::asinh(x);
}

double mu_constant(double tol) {
  if (!(tol > 0.0 && tol <= 1e-6)) raise(ErrorKind::domain, "mu tolerance must lie in (0, 1e-6]");
  return bracketed_root(mu_equation, 1.0, 2.0, tol);
}

}  // namespace bernlab
