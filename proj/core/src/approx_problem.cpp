#include <algorithm>
#include <cmath>
#include <sstream>

#include "bernlab/best_approx.hpp"
#include "bernlab/error.hpp"
#include "detail/reduced_problem.hpp"

namespace bernlab {

std::string to_string(SymmetryHint hint) { return hint == SymmetryHint::even ? "even" : "none"; }

ApproxProblem ApproxProblem::for_spec(const FunctionSpec& spec, int degree, PNorm pnorm,
                                      double half_width) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    raise(ErrorKind::domain, "half width must be positive and finite");
  }
  ApproxProblem problem;
  problem.target = [spec](double x) { return spec(x); };
  problem.spec = spec;
  problem.interval = symmetric_interval(half_width);
  problem.degree = degree;
  problem.pnorm = pnorm;
  problem.grid.exclude_origin = spec.excludes_origin();
  problem.symmetry = spec.is_even() ? SymmetryHint::even : SymmetryHint::none;
  problem.real_valued = spec.is_real_valued();
  problem.discrete = pnorm.is_infinite() && spec.alpha() <= 0.0 && spec.beta() != 0.0;
  return problem;
}

ApproxProblem ApproxProblem::for_function(ComplexFunction target, bool real_valued, int degree,
                                          PNorm pnorm, Interval interval) {
  ApproxProblem problem;
  problem.target = std::move(target);
  problem.interval = interval;
  problem.degree = degree;
  problem.pnorm = pnorm;
  problem.real_valued = real_valued;
  return problem;
}

QuadratureGrid ApproxProblem::make_grid() const { return QuadratureGrid::graded(interval, grid); }

ApproxResult solve(const ApproxProblem& problem) {
  const PNorm& p = problem.pnorm;
  if (p.is_infinite()) return problem.real_valued ? remez_linf(problem) : minimax_complex(problem);
  if (p.p() == 2.0) return project_l2(problem);
  if (p.p() == 1.0) return best_l1(problem);
  return best_lp(problem);
}

namespace detail {

namespace {

// Symmetric intervals reuse the grid of [-1, 1] (its floor is relative), so
// dilated problems see bit-identical nodes in t.
QuadratureGrid reduced_grid(const ApproxProblem& problem, bool symmetric) {
  if (symmetric) return QuadratureGrid::graded(Interval{-1.0, 1.0}, problem.grid);
  const double mid = problem.interval.midpoint();
  const double half = problem.interval.half_width();
  const QuadratureGrid raw = problem.make_grid();
  std::vector<Panel> panels;
  for (const Panel& panel : raw.panels()) {
    // Panels graded toward x = 0 no longer touch t = 0 after the shift.
    panels.push_back({(panel.lo - mid) / half, (panel.hi - mid) / half, false});
  }
  panels.front().lo = -1.0;
  panels.back().hi = 1.0;
  return QuadratureGrid(Interval{-1.0, 1.0}, std::move(panels), raw.nodes_per_panel(),
                        raw.origin_floor() / half, false);
}

}  // namespace

void validate_common(const ApproxProblem& problem) {
  if (!problem.target) raise(ErrorKind::domain, "approximation problem has no target");
  if (problem.degree < 0) raise(ErrorKind::domain, "degree must be nonnegative");
  const Interval& iv = problem.interval;
  if (!(iv.lo < iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
    raise(ErrorKind::domain, "interval must satisfy lo < hi");
  }
  if (!problem.spec) return;
  const FunctionSpec& spec = *problem.spec;
  if (iv.lo != -iv.hi) raise(ErrorKind::domain, "family targets need a symmetric interval [-a, a]");
  if (spec.excludes_origin() && !problem.grid.exclude_origin) {
    raise(ErrorKind::grid, "the grid must exclude 0 when alpha <= 0");
  }
  const PNorm& p = problem.pnorm;
  if (p.is_infinite()) {
    if (spec.alpha() < 0.0) raise(ErrorKind::domain, "alpha < 0 is unbounded near 0; p = inf needs alpha >= 0");
  } else if (!(spec.alpha() > -1.0 / p.p())) {
    raise(ErrorKind::domain, "alpha must exceed -1/p for the target to lie in L_p");
  }
}

ReducedProblem reduce(const ApproxProblem& problem) {
  validate_common(problem);
  const double mid = problem.interval.midpoint();
  const double half = problem.interval.half_width();
  const bool symmetric = problem.interval.lo == -problem.interval.hi;
  ReducedProblem reduced(reduced_grid(problem, symmetric));
  reduced.degree = problem.degree;
  reduced.half_width = half;
  reduced.midpoint = mid;
  reduced.real_valued = problem.real_valued;
  reduced.g = [target = problem.target, mid, half](double t) { return target(mid + half * t); };
  reduced.even = problem.symmetry == SymmetryHint::even && symmetric;

  const auto nodes = reduced.grid.nodes();
  const auto weights = reduced.grid.weights();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (reduced.even) {
      if (nodes[i] > 0.0) {
        reduced.quad_nodes.push_back(nodes[i]);
        reduced.quad_weights.push_back(2.0 * weights[i]);
      }
    } else {
      reduced.quad_nodes.push_back(nodes[i]);
      reduced.quad_weights.push_back(weights[i]);
    }
  }
  for (double t : reduced.grid.sup_nodes()) {
    if (!reduced.even || t >= 0.0) reduced.sup_nodes.push_back(t);
  }
  for (int k = 0; k <= problem.degree; ++k) {
    if (!reduced.even || k % 2 == 0) reduced.basis.push_back(k);
  }
  return reduced;
}

Eigen::MatrixXd basis_matrix(std::span<const double> ts, std::span<const int> basis, int degree) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(ts.size()), static_cast<Eigen::Index>(basis.size()));
  std::vector<double> row(degree + 1);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    row[0] = 1.0;
    if (degree >= 1) row[1] = t;
    for (int k = 2; k <= degree; ++k) row[k] = 2.0 * t * row[k - 1] - row[k - 2];
    for (std::size_t j = 0; j < basis.size(); ++j) out(i, j) = row[basis[j]];
  }
  return out;
}

Eigen::VectorXcd sample(const ComplexFunction& g, std::span<const double> ts) {
  Eigen::VectorXcd values(static_cast<Eigen::Index>(ts.size()));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::complex<double> v = g(ts[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      raise(ErrorKind::non_finite, "target is not finite at a grid node");
    }
    values[static_cast<Eigen::Index>(i)] = v;
  }
  return values;
}

std::vector<std::complex<double>> expand(const ReducedProblem& reduced,
                                         std::span<const std::complex<double>> coeffs) {
  std::vector<std::complex<double>> full(reduced.degree + 1);
  for (std::size_t j = 0; j < reduced.basis.size(); ++j) full[reduced.basis[j]] = coeffs[j];
  return full;
}

Polynomial make_polynomial(const ReducedProblem& reduced, const ApproxProblem& problem,
                           std::span<const std::complex<double>> coeffs) {
  return Polynomial(Basis::chebyshev, expand(reduced, coeffs), problem.interval);
}

Eigen::VectorXcd weighted_least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& weights,
                                        const Eigen::VectorXcd& values) {
  const Eigen::VectorXd root = weights.cwiseSqrt();
  const Eigen::MatrixXd scaled = root.asDiagonal() * design;
  Eigen::MatrixXd rhs(values.size(), 2);
  rhs.col(0) = root.cwiseProduct(values.real());
  rhs.col(1) = root.cwiseProduct(values.imag());
  const Eigen::MatrixXd solution = scaled.colPivHouseholderQr().solve(rhs);
  Eigen::VectorXcd out(design.cols());
  for (Eigen::Index j = 0; j < design.cols(); ++j) out[j] = {solution(j, 0), solution(j, 1)};
  return out;
}

double norm_scale(const ApproxProblem& problem) {
  return std::pow(problem.interval.half_width(), problem.pnorm.inverse());
}

std::string grid_note(const ApproxProblem& problem, const QuadratureGrid& grid) {
  std::ostringstream out;
  out.precision(3);
  if (problem.pnorm.is_infinite()) {
    out << "uniform norm over " << grid.sup_nodes().size() << " grid points";
  } else {
    out << "quadrature over " << grid.nodes().size() << " nodes";
  }
  out << " (panels graded to relative floor " << problem.grid.origin_floor << ", "
      << grid.nodes_per_panel() << " nodes per panel"
      << (grid.excludes_origin() ? ", origin excluded)" : ")");
  return out.str();
}

std::vector<double> sign_change_points(std::span<const double> ts, std::span<const double> values,
                                       double threshold) {
  std::vector<double> out;
  int last_sign = 0;
  std::size_t last_index = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i]) <= threshold) continue;
    const int sign = values[i] > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) out.push_back(0.5 * (ts[last_index] + ts[i]));
    last_sign = sign;
    last_index = i;
  }
  return out;
}

}  // namespace detail
}  // namespace bernlab
