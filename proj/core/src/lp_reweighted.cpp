#include <algorithm>
#include <cmath>
#include <limits>

#include "bernlab/best_approx.hpp"
#include "bernlab/error.hpp"
#include "detail/reduced_problem.hpp"

namespace bernlab {

namespace {

using Eigen::VectorXcd;
using Eigen::VectorXd;

// (sum w |r|^q)^(1/q), scaled by the peak so large q cannot overflow.
double lq_norm(const VectorXd& modulus, const VectorXd& weights, double q) {
  const double peak = modulus.maxCoeff();
  if (!(peak > 0.0)) return 0.0;
  return peak * std::pow(weights.dot((modulus / peak).array().pow(q).matrix()), 1.0 / q);
}

}  // namespace

ApproxResult best_lp(const ApproxProblem& problem) {
  const PNorm& pnorm = problem.pnorm;
  if (pnorm.is_infinite() || pnorm.p() == 1.0) {
    raise(ErrorKind::domain, "best_lp needs 1 < p < inf");
  }
  const double p = pnorm.p();
  const detail::ReducedProblem rd = detail::reduce(problem);
  const VectorXcd values = detail::sample(rd.g, rd.quad_nodes);
  const Eigen::MatrixXd design = detail::basis_matrix(rd.quad_nodes, rd.basis, rd.degree);
  const Eigen::MatrixXcd complex_design = design.cast<std::complex<double>>();
  const VectorXd weights = Eigen::Map<const VectorXd>(rd.quad_weights.data(),
                                                      static_cast<Eigen::Index>(rd.quad_weights.size()));
  const double fscale = std::max(values.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());

  auto modulus_of = [&](const VectorXcd& c) -> VectorXd { return (values - complex_design * c).cwiseAbs(); };

  VectorXcd c = detail::weighted_least_squares(design, weights, values);
  double error = lq_norm(modulus_of(c), weights, 2.0);
  const double exact_floor = 1e-13 * fscale;
  int iterations = 0;
  bool converged = false;

  // Continuation in the exponent: each stage starts from the previous optimum.
  std::vector<double> stages;
  for (double q = 2.0; q != p;) {
    q = p > 2.0 ? std::min(p, q * 1.5) : std::max(p, q / 1.5);
    stages.push_back(q);
  }
  if (stages.empty()) converged = true;
  for (std::size_t stage = 0; stage < stages.size(); ++stage) {
    const double q = stages[stage];
    const bool last = stage + 1 == stages.size();
    const int budget = last ? problem.limits.lp_iterations : 40;
    const double tolerance = last ? problem.limits.lp_change : 1e-6;
    error = lq_norm(modulus_of(c), weights, q);
    for (int it = 1; it <= budget; ++it) {
      if (last) iterations = it;
      const VectorXd modulus = modulus_of(c);
      if (modulus.maxCoeff() <= exact_floor) {
        converged = true;
        break;
      }
      const double peak = modulus.maxCoeff();
      const double regular = 1e-10 * peak;
      VectorXd w(modulus.size());
      for (Eigen::Index i = 0; i < modulus.size(); ++i) {
        const double r = std::max(modulus[i], regular) / peak;
        w[i] = weights[i] * std::pow(r, q - 2.0);
      }
      const VectorXcd step = detail::weighted_least_squares(design, w / w.maxCoeff(), values) - c;
      // The Newton step is step / (q - 1); the line search covers it and the full step.
      const Maximum best = golden_maximize(
          [&](double theta) { return -lq_norm(modulus_of(c + theta * step), weights, q); }, 0.0, 1.0,
          1e-6);
      if (!(best.x > 0.0) || !(-best.value < error)) {
        if (last) converged = true;
        break;
      }
      c += best.x * step;
      const double next = -best.value;
      const double change = (error - next) / std::max(next, std::numeric_limits<double>::min());
      error = next;
      if (change < tolerance) {
        if (last) converged = true;
        break;
      }
    }
  }

  std::vector<std::complex<double>> coeffs(c.data(), c.data() + c.size());
  ApproxResult result;
  result.error = lq_norm(modulus_of(c), weights, p) * detail::norm_scale(problem);
  result.polynomial = detail::make_polynomial(rd, problem, coeffs);
  result.pnorm = pnorm;
  result.interval = problem.interval;
  result.degree = problem.degree;
  result.discretized = false;
  result.discretization_note = detail::grid_note(problem, rd.grid);
  result.diagnostics.method = "reweighted_least_squares";
  result.diagnostics.iterations = iterations;
  result.diagnostics.converged = converged;
  return result;
}

}  // namespace bernlab
