#include <cmath>
#include <limits>

#include "bernlab/best_approx.hpp"
#include "bernlab/error.hpp"
#include "detail/reduced_problem.hpp"

namespace bernlab {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

struct PolishResult {
  MatrixXd coeffs;  // m x D
  double upper = 0.0;
  double lower = 0.0;
  int newton_steps = 0;
  bool converged = false;
};

// Log-barrier path following for min tau s.t. |f_i - A_i C| <= tau on every
// node, started from a strictly feasible point. The barrier -log(tau^2 - |r|^2)
// has parameter 2, so the duality gap on the central path is 2N/t.
PolishResult barrier_polish(const MatrixXd& A, const MatrixXd& F, MatrixXd C, double gap_tol) {
  const Index n = A.rows();
  const Index m = A.cols();
  const Index dim = F.cols();
  const Index size = m * dim + 1;

  auto residual = [&](const MatrixXd& c) -> MatrixXd { return F - A * c; };
  MatrixXd R = residual(C);
  double upper = R.rowwise().norm().maxCoeff();
  double tau = 1.05 * upper + 1e-300;
  double t = static_cast<double>(n) / std::max(upper, 1e-300);
  const double target_t = 2.0 * static_cast<double>(n) / (gap_tol * std::max(upper, 1e-300));

  auto barrier = [&](const MatrixXd& r, double tau_value, double t_value, bool& feasible) {
    const VectorXd s = (tau_value * tau_value - r.rowwise().squaredNorm().array()).matrix();
    feasible = tau_value > 0.0 && (s.array() > 0.0).all();
    if (!feasible) return std::numeric_limits<double>::infinity();
    return t_value * tau_value - s.array().log().sum();
  };

  PolishResult out;
  for (int outer = 0; outer < 60; ++outer) {
    for (int step = 0; step < 80; ++step) {
      R = residual(C);
      const VectorXd s = (tau * tau - R.rowwise().squaredNorm().array()).matrix();
      // Gradient rows of s_i: [2 r_ip a_i (per block p), 2 tau].
      MatrixXd G(n, size);
      for (Index p = 0; p < dim; ++p) G.middleCols(p * m, m) = (2.0 * R.col(p)).asDiagonal() * A;
      G.col(size - 1).setConstant(2.0 * tau);
      const VectorXd inv_s = s.cwiseInverse();
      VectorXd grad = -(G.transpose() * inv_s);
      grad[size - 1] += t;
      MatrixXd H = G.transpose() * inv_s.cwiseAbs2().asDiagonal() * G;
      const MatrixXd aa = A.transpose() * (2.0 * inv_s).asDiagonal() * A;
      for (Index p = 0; p < dim; ++p) H.block(p * m, p * m, m, m) += aa;
      H(size - 1, size - 1) -= 2.0 * inv_s.sum();
      const VectorXd dz = -H.ldlt().solve(grad);
      const double decrement = -grad.dot(dz);
      if (!dz.allFinite()) break;
      if (decrement < 1e-10) break;

      bool feasible = false;
      const double current = barrier(R, tau, t, feasible);
      double alpha = 1.0;
      MatrixXd dC(m, dim);
      for (Index p = 0; p < dim; ++p) dC.col(p) = dz.segment(p * m, m);
      bool moved = false;
      for (int back = 0; back < 60; ++back) {
        const MatrixXd trial_c = C + alpha * dC;
        const double trial_tau = tau + alpha * dz[size - 1];
        const double value = barrier(residual(trial_c), trial_tau, t, feasible);
        if (feasible && value <= current - 0.25 * alpha * decrement) {
          C = trial_c;
          tau = trial_tau;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      ++out.newton_steps;
      if (!moved) break;
    }
    upper = residual(C).rowwise().norm().maxCoeff();
    if (t >= target_t) {
      out.converged = true;
      break;
    }
    t = std::min(10.0 * t, target_t);
  }
  out.coeffs = C;
  out.upper = upper;
  out.lower = std::max(0.0, tau - 2.0 * static_cast<double>(n) / t);
  return out;
}

}  // namespace

ApproxResult minimax_complex(const ApproxProblem& problem) {
  if (!problem.pnorm.is_infinite()) raise(ErrorKind::domain, "minimax_complex needs p = inf");
  const detail::ReducedProblem rd = detail::reduce(problem);
  const std::vector<double>& nodes = rd.sup_nodes;
  const auto m = static_cast<Index>(rd.basis.size());
  if (static_cast<Index>(nodes.size()) < m + 1) {
    raise(ErrorKind::grid, "grid has fewer points than the basis needs");
  }
  const Eigen::VectorXcd raw = detail::sample(rd.g, nodes);
  const MatrixXd design = detail::basis_matrix(nodes, rd.basis, rd.degree);
  const auto count = static_cast<Index>(nodes.size());
  const double fscale = std::max(raw.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const Eigen::VectorXcd values = raw / fscale;
  const auto modulus_of = [&](const Eigen::VectorXcd& c) -> VectorXd {
    return (values - design.cast<std::complex<double>>() * c).cwiseAbs();
  };

  // Lawson: multiplicative reweighting of weighted least-squares fits.
  VectorXd weights = VectorXd::Constant(count, 1.0 / static_cast<double>(count));
  Eigen::VectorXcd best_c = Eigen::VectorXcd::Zero(m);
  double upper = values.cwiseAbs().maxCoeff();  // zero polynomial
  double lower = 0.0;
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(m + 1);
  bool converged = false;
  bool exact = false;
  int iterations = 0;
  for (int it = 1; it <= problem.limits.lawson_iterations; ++it) {
    iterations = it;
    const Eigen::VectorXcd c = detail::weighted_least_squares(design, weights, values);
    const VectorXd modulus = modulus_of(c);
    // The weighted least-squares error never exceeds the discrete minimax error.
    lower = std::max(lower, std::sqrt(weights.dot(modulus.cwiseAbs2()) / weights.sum()));
    if (modulus.maxCoeff() < upper) {
      upper = modulus.maxCoeff();
      best_c = c;
    }
    if (upper <= noise * std::max(1.0, c.cwiseAbs().sum())) {
      converged = exact = true;
      break;
    }
    if (upper - lower <= problem.limits.lawson_gap * upper) {
      converged = true;
      break;
    }
    // Once the bracket is narrow the barrier finish is cheaper than more sweeps.
    if (upper - lower <= 1e-3 * upper && it >= 50) break;
    weights = weights.cwiseProduct(modulus);
    const double total = weights.sum();
    if (!(total > 0.0)) break;
    weights /= total;
  }

  std::string method = "lawson";
  int newton_steps = 0;
  if (!converged) {
    const Index dim = problem.real_valued ? 1 : 2;
    MatrixXd F(count, dim);
    F.col(0) = values.real();
    if (dim == 2) F.col(1) = values.imag();
    MatrixXd C(m, dim);
    C.col(0) = best_c.real();
    if (dim == 2) C.col(1) = best_c.imag();
    const PolishResult polished = barrier_polish(design, F, C, problem.limits.lawson_gap);
    newton_steps = polished.newton_steps;
    method = "lawson+barrier";
    if (polished.upper < upper) {
      upper = polished.upper;
      for (Index j = 0; j < m; ++j) best_c[j] = {polished.coeffs(j, 0), dim == 2 ? polished.coeffs(j, 1) : 0.0};
    }
    lower = std::max(lower, polished.lower);
    converged = polished.converged && upper - lower <= 10.0 * problem.limits.lawson_gap * upper;
  }

  best_c *= fscale;
  std::vector<std::complex<double>> coeffs(best_c.data(), best_c.data() + m);
  ApproxResult result;
  result.error = modulus_of(best_c / fscale).maxCoeff() * fscale * detail::norm_scale(problem);
  result.polynomial = detail::make_polynomial(rd, problem, coeffs);
  result.pnorm = problem.pnorm;
  result.interval = problem.interval;
  result.degree = problem.degree;
  result.discretized = true;
  result.discretization_note = detail::grid_note(problem, rd.grid);
  result.diagnostics.method = method;
  result.diagnostics.iterations = iterations + newton_steps;
  result.diagnostics.converged = converged;
  result.diagnostics.lower_bound = (exact ? 0.0 : lower) * fscale * detail::norm_scale(problem);
  return result;
}

}  // namespace bernlab
