#include "bernlab/polynomial.hpp"

#include <cmath>
#include <numbers>

#include "bernlab/error.hpp"

namespace bernlab {

namespace {

using Complex = std::complex<double>;
using LongComplex = std::complex<long double>;

void require_convertible(const Polynomial& poly) {
  if (poly.degree() > kMaxMonomialDegree) {
    raise(ErrorKind::degree_too_large,
          "basis conversion is limited to degree " + std::to_string(kMaxMonomialDegree));
  }
}

}  // namespace

std::string to_string(Basis basis) {
  return basis == Basis::chebyshev ? "chebyshev_first_kind" : "monomial";
}

Basis parse_basis(std::string_view text) {
  if (text == "chebyshev_first_kind" || text == "chebyshev") return Basis::chebyshev;
  if (text == "monomial") return Basis::monomial;
  raise(ErrorKind::domain, "unknown basis '" + std::string(text) + "'");
}

Polynomial::Polynomial(Basis basis, std::vector<Complex> coeffs, Interval reference)
    : basis_(basis), coeffs_(std::move(coeffs)), interval_(reference) {
  if (coeffs_.empty()) raise(ErrorKind::domain, "a polynomial needs at least one coefficient");
  if (!(interval_.lo < interval_.hi)) raise(ErrorKind::domain, "reference interval must satisfy lo < hi");
}

Polynomial Polynomial::zero(int degree, Interval reference) {
  if (degree < 0) raise(ErrorKind::domain, "degree must be nonnegative");
  return Polynomial(Basis::chebyshev, std::vector<Complex>(degree + 1), reference);
}

double Polynomial::normalized(double x) const noexcept {
  return (2.0 * x - interval_.lo - interval_.hi) / (interval_.hi - interval_.lo);
}

Complex Polynomial::operator()(double x) const {
  const double t = normalized(x);
  if (basis_ == Basis::chebyshev) {
    return clenshaw<Complex>(coeffs_, t);
  }
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex poly_eval(const Polynomial& poly, double x) { return poly(x); }

Polynomial to_monomial(const Polynomial& poly) {
  require_convertible(poly);
  if (poly.basis() == Basis::monomial) return poly;
  const int n = poly.degree();
  std::vector<LongComplex> result(n + 1);
  // Monomial expansions of T_{k-1} and T_k, built by T_{k+1} = 2t T_k - T_{k-1}.
  std::vector<long double> previous(n + 2, 0.0L);
  std::vector<long double> current(n + 2, 0.0L);
  previous[0] = 1.0L;
  current[1] = 1.0L;
  const auto coeffs = poly.coeffs();
  result[0] += LongComplex(coeffs[0].real(), coeffs[0].imag());
  for (int k = 1; k <= n; ++k) {
    const LongComplex c(coeffs[k].real(), coeffs[k].imag());
    for (int j = 0; j <= k; ++j) result[j] += c * current[j];
    if (k == n) break;
    std::vector<long double> next(n + 2, 0.0L);
    for (int j = 0; j <= k; ++j) next[j + 1] += 2.0L * current[j];
    for (int j = 0; j <= k - 1; ++j) next[j] -= previous[j];
    previous.swap(current);
    current.swap(next);
  }
  std::vector<Complex> out(n + 1);
  for (int j = 0; j <= n; ++j) {
    out[j] = Complex(static_cast<double>(result[j].real()), static_cast<double>(result[j].imag()));
  }
  return Polynomial(Basis::monomial, std::move(out), poly.interval());
}

Polynomial to_chebyshev(const Polynomial& poly) {
  require_convertible(poly);
  if (poly.basis() == Basis::chebyshev) return poly;
  const int n = poly.degree();
  const auto coeffs = poly.coeffs();
  // Horner's scheme carried out on Chebyshev series: q <- t q + c_k.
  std::vector<LongComplex> q(n + 2);
  for (int k = n; k >= 0; --k) {
    std::vector<LongComplex> shifted(n + 2);
    for (int j = 0; j <= n; ++j) {
      if (q[j] == LongComplex{}) continue;
      if (j == 0) {
        shifted[1] += q[0];
      } else {
        shifted[j + 1] += 0.5L * q[j];
        shifted[j - 1] += 0.5L * q[j];
      }
    }
    shifted[0] += LongComplex(coeffs[k].real(), coeffs[k].imag());
    q.swap(shifted);
  }
  std::vector<Complex> out(n + 1);
  for (int j = 0; j <= n; ++j) {
    out[j] = Complex(static_cast<double>(q[j].real()), static_cast<double>(q[j].imag()));
  }
  return Polynomial(Basis::chebyshev, std::move(out), poly.interval());
}

Polynomial chebyshev_interpolant(const ComplexFunction& f, int degree, Interval reference) {
  if (degree < 0) raise(ErrorKind::domain, "degree must be nonnegative");
  const int count = degree + 1;
  std::vector<Complex> values(count);
  std::vector<double> angles(count);
  for (int j = 0; j < count; ++j) {
    angles[j] = std::numbers::pi * (j + 0.5) / count;
    const double t = std::cos(angles[j]);
    values[j] = f(reference.midpoint() + reference.half_width() * t);
  }
  std::vector<Complex> coeffs(count);
  for (int k = 0; k < count; ++k) {
    Complex sum = 0.0;
    for (int j = 0; j < count; ++j) sum += values[j] * std::cos(k * angles[j]);
    coeffs[k] = (k == 0 ? 1.0 : 2.0) * sum / static_cast<double>(count);
  }
  return Polynomial(Basis::chebyshev, std::move(coeffs), reference);
}

CoefficientBoundReport coeff_bound_check(const Polynomial& poly, double sup_norm) {
  if (!(poly.interval() == Interval{-1.0, 1.0})) {
    raise(ErrorKind::domain, "the coefficient bound is stated on [-1, 1]");
  }
  if (!(sup_norm >= 0.0) || !std::isfinite(sup_norm)) {
    raise(ErrorKind::domain, "sup norm must be a finite nonnegative number");
  }
  const Polynomial monomial = to_monomial(poly);
  CoefficientBoundReport report;
  report.degree = monomial.degree();
  report.sup_norm = sup_norm;
  report.pass = true;
  const double n = monomial.degree();
  double factor = 1.0;  // n^k / k!
  for (int k = 0; k <= monomial.degree(); ++k) {
    if (k > 0) factor *= n / k;
    CoefficientBound row;
    row.k = k;
    row.magnitude = std::abs(monomial.coeffs()[k]);
    row.bound = factor * sup_norm;
    row.pass = row.magnitude <= row.bound * (1.0 + 1e-12);
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

double grid_sup_norm(const Polynomial& poly, int points) {
  const auto ts = chebyshev_lobatto(std::max(1, points - 1));
  const Interval& ref = poly.interval();
  double sup = 0.0;
  for (double t : ts) sup = std::max(sup, std::abs(poly(ref.midpoint() + ref.half_width() * t)));
  return sup;
}

}  // namespace bernlab
