#include <cmath>
#include <limits>

#include "bernlab/error.hpp"
#include "bernlab/numerics.hpp"

namespace bernlab {

double bracketed_root(const RealFunction& f, double lo, double hi, double tol) {
  if (!(tol > 0.0)) raise(ErrorKind::domain, "root tolerance must be positive");
  if (!(lo < hi)) raise(ErrorKind::domain, "root bracket must satisfy lo < hi");
  constexpr double eps = std::numeric_limits<double>::epsilon();

  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    raise(ErrorKind::non_finite, "non-finite function value at bracket endpoint");
  }
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    raise(ErrorKind::no_bracket, "f(lo) and f(hi) have the same sign");
  }

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < 500; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double step_tol = std::max(0.5 * tol, 2.0 * eps * std::abs(b));
    const double half = 0.5 * (c - b);
    if (fb == 0.0) return b;
    if (std::abs(half) <= step_tol && (std::abs(fb) <= tol || std::abs(half) <= 2.0 * eps * std::abs(b))) {
      return b;
    }

    if (std::abs(e) >= step_tol && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, or secant when only two points differ.
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * half * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * half * q - std::abs(step_tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = half;
        e = d;
      }
    } else {
      d = half;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > step_tol ? d : std::copysign(step_tol, half);
    fb = f(b);
    if (!std::isfinite(fb)) raise(ErrorKind::non_finite, "non-finite function value inside bracket");
  }
  return b;
}

Maximum golden_maximize(const RealFunction& f, double lo, double hi, double x_tol) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double x1 = b - ratio * (b - a);
  double x2 = a + ratio * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  Maximum best{lo, f(lo)};
  const double fhi = f(hi);
  if (fhi > best.value) best = {hi, fhi};
  while (b - a > x_tol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = f(x2);
    }
  }
  if (f1 > best.value) best = {x1, f1};
  if (f2 > best.value) best = {x2, f2};
  return best;
}

}  // namespace bernlab
