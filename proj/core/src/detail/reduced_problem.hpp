#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "bernlab/best_approx.hpp"

namespace bernlab::detail {

// An approximation problem pulled back to t in [-1, 1] by x = mid + half * t.
// Under the even hint only t >= 0 is kept, quadrature weights are doubled and
// the basis is restricted to even Chebyshev polynomials.
struct ReducedProblem {
  explicit ReducedProblem(QuadratureGrid solve_grid) : grid(std::move(solve_grid)) {}

  ComplexFunction g;
  int degree = 0;
  bool even = false;
  bool real_valued = false;
  std::vector<int> basis;        // Chebyshev indices in use
  double half_width = 1.0;
  double midpoint = 0.0;
  QuadratureGrid grid;           // on [-1, 1]
  std::vector<double> quad_nodes;
  std::vector<double> quad_weights;
  std::vector<double> sup_nodes;  // ascending, restricted to the solve domain
};

ReducedProblem reduce(const ApproxProblem& problem);

void validate_common(const ApproxProblem& problem);

/// Rows T_{basis[j]}(t_i).
Eigen::MatrixXd basis_matrix(std::span<const double> ts, std::span<const int> basis, int degree);

/// Values of g at the given points; NonFinite if any is not finite.
Eigen::VectorXcd sample(const ComplexFunction& g, std::span<const double> ts);

/// Chebyshev coefficients of length degree+1 scattered from the basis subset.
std::vector<std::complex<double>> expand(const ReducedProblem& reduced,
                                         std::span<const std::complex<double>> coeffs);

Polynomial make_polynomial(const ReducedProblem& reduced, const ApproxProblem& problem,
                           std::span<const std::complex<double>> coeffs);

/// argmin_c sum_i w_i |f_i - (A c)_i|^2 for a real design A, by QR.
Eigen::VectorXcd weighted_least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& weights,
                                        const Eigen::VectorXcd& values);

/// Factor turning an error on [-1, 1] into the error on the problem interval.
double norm_scale(const ApproxProblem& problem);

std::string grid_note(const ApproxProblem& problem, const QuadratureGrid& grid);

/// Indices of sign changes of a real sequence, ignoring entries with
/// |value| <= threshold; returns midpoints between the straddling nodes.
std::vector<double> sign_change_points(std::span<const double> ts, std::span<const double> values,
                                       double threshold);

}  // namespace bernlab::detail
