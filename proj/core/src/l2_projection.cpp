#include <cmath>

#include "bernlab/best_approx.hpp"
#include "bernlab/error.hpp"
#include "detail/reduced_problem.hpp"

namespace bernlab {

namespace {

// Legendre values P_0..P_degree at t.
void legendre_row(double t, int degree, std::vector<double>& row) {
  row.assign(degree + 1, 0.0);
  row[0] = 1.0;
  if (degree >= 1) row[1] = t;
  for (int k = 2; k <= degree; ++k) row[k] = ((2.0 * k - 1.0) * t * row[k - 1] - (k - 1.0) * row[k - 2]) / k;
}

}  // namespace

ApproxResult project_l2(const ApproxProblem& problem) {
  if (problem.pnorm.is_infinite() || problem.pnorm.p() != 2.0) {
    raise(ErrorKind::domain, "project_l2 needs p = 2");
  }
  const detail::ReducedProblem rd = detail::reduce(problem);
  const Eigen::VectorXcd values = detail::sample(rd.g, rd.quad_nodes);
  const int n = rd.degree;

  double norm2 = 0.0;
  std::vector<std::complex<double>> legendre(n + 1);
  std::vector<double> row;
  for (std::size_t i = 0; i < rd.quad_nodes.size(); ++i) {
    const auto v = values[static_cast<Eigen::Index>(i)];
    const double w = rd.quad_weights[i];
    norm2 += w * std::norm(v);
    legendre_row(rd.quad_nodes[i], n, row);
    for (int k = 0; k <= n; ++k) legendre[k] += w * v * row[k];
  }
  if (!std::isfinite(norm2)) raise(ErrorKind::quadrature, "norm quadrature did not produce a finite value");
  double captured = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (rd.even && k % 2 == 1) {
      legendre[k] = 0.0;
      continue;
    }
    // Orthogonality: the integral of P_k^2 over [-1, 1] is 2 / (2k + 1).
    captured += std::norm(legendre[k]) * (2.0 * k + 1.0) / 2.0;
    legendre[k] *= (2.0 * k + 1.0) / 2.0;
  }

  double direct2 = 0.0;
  for (std::size_t i = 0; i < rd.quad_nodes.size(); ++i) {
    legendre_row(rd.quad_nodes[i], n, row);
    std::complex<double> p = 0.0;
    for (int k = 0; k <= n; ++k) p += legendre[k] * row[k];
    direct2 += rd.quad_weights[i] * std::norm(values[static_cast<Eigen::Index>(i)] - p);
  }
  const double pythagoras2 = std::max(0.0, norm2 - captured);
  const double scale = detail::norm_scale(problem);
  const double pythagoras = std::sqrt(pythagoras2) * scale;
  const double direct = std::sqrt(direct2) * scale;

  auto series = [&legendre, n](double x) {
    std::vector<double> values_at;
    legendre_row(x, n, values_at);
    std::complex<double> p = 0.0;
    for (int k = 0; k <= n; ++k) p += legendre[k] * values_at[k];
    return p;
  };
  Polynomial in_t = chebyshev_interpolant(series, n);

  ApproxResult result;
  // Cancellation in ||f||^2 - sum |a_k|^2 ruins small errors; fall back to the residual.
  result.error = pythagoras2 > 1e-8 * norm2 ? pythagoras : direct;
  result.polynomial = Polynomial(Basis::chebyshev,
                                 std::vector<std::complex<double>>(in_t.coeffs().begin(), in_t.coeffs().end()),
                                 problem.interval);
  result.pnorm = problem.pnorm;
  result.interval = problem.interval;
  result.degree = problem.degree;
  result.discretized = false;
  result.discretization_note = detail::grid_note(problem, rd.grid);
  result.diagnostics.method = "legendre_projection";
  result.diagnostics.iterations = 1;
  result.diagnostics.converged = true;
  result.diagnostics.pythagoras_error = pythagoras;
  result.diagnostics.direct_error = direct;
  if (rd.even) {
    // Odd Chebyshev coefficients are zero by construction; clear rounding.
    auto coeffs = std::vector<std::complex<double>>(result.polynomial.coeffs().begin(),
                                                    result.polynomial.coeffs().end());
    for (std::size_t k = 1; k < coeffs.size(); k += 2) coeffs[k] = 0.0;
    result.polynomial = Polynomial(Basis::chebyshev, std::move(coeffs), problem.interval);
  }
  return result;
}

}  // namespace bernlab
