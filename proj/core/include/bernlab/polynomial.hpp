#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bernlab/numerics.hpp"

namespace bernlab {

enum class Basis { chebyshev, monomial };

std::string to_string(Basis basis);
Basis parse_basis(std::string_view text);

/// Largest degree accepted by monomial conversions.
inline constexpr int kMaxMonomialDegree = 64;

/// A polynomial of degree at most n with complex coefficients. The basis is
/// scaled to the reference interval: coefficients multiply T_k(t) or t^k with
/// t = (2x - lo - hi) / (hi - lo). Trailing zero coefficients are kept.
class Polynomial {
 public:
  Polynomial(Basis basis, std::vector<std::complex<double>> coeffs, Interval reference = {});

  static Polynomial zero(int degree, Interval reference = {});

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Basis basis() const noexcept { return basis_; }
  const Interval& interval() const noexcept { return interval_; }
  std::span<const std::complex<double>> coeffs() const noexcept { return coeffs_; }

  /// Position in the normalised variable t in [-1, 1].
  double normalized(double x) const noexcept;

  std::complex<double> operator()(double x) const;

 private:
  Basis basis_;
  std::vector<std::complex<double>> coeffs_;
  Interval interval_;
};

std::complex<double> poly_eval(const Polynomial& poly, double x);

/// Clenshaw summation of sum c_k T_k(t).
template <typename Scalar>
Scalar clenshaw(std::span<const Scalar> coeffs, double t) {
  Scalar b1{};
  Scalar b2{};
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    const Scalar b0 = coeffs[k] + 2.0 * t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  if (coeffs.empty()) return Scalar{};
  return coeffs[0] + t * b1 - b2;
}

/// Same function in the monomial basis (t^k on the reference interval).
Polynomial to_monomial(const Polynomial& poly);
/// Same function in the Chebyshev basis.
Polynomial to_chebyshev(const Polynomial& poly);

/// Chebyshev coefficients of the degree-n interpolant at the n+1 first-kind
/// Chebyshev points of the interval. Exact (to rounding) for polynomials.
Polynomial chebyshev_interpolant(const ComplexFunction& f, int degree, Interval reference = {});

struct CoefficientBound {
  int k = 0;
  double magnitude = 0.0;  // |c_k| in the monomial basis
  double bound = 0.0;      // n^k / k! * sup_norm
  bool pass = false;
};

struct CoefficientBoundReport {
  int degree = 0;
  double sup_norm = 0.0;
  std::vector<CoefficientBound> rows;
  bool pass = false;
};

/// Markov-type coefficient bound for polynomials on [-1, 1] in the uniform
/// norm: |c_k| <= n^k / k! * ||P||. The comparison allows a 1e-12 relative
/// slack for rounding in the basis conversion.
CoefficientBoundReport coeff_bound_check(const Polynomial& poly, double sup_norm);

/// max |P| over a Chebyshev-Lobatto set of the given size on the reference
/// interval; converges to the uniform norm from below.
double grid_sup_norm(const Polynomial& poly, int points = 4096);

}  // namespace bernlab
