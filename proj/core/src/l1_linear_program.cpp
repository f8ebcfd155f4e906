#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "bernlab/best_approx.hpp"
#include "bernlab/error.hpp"
#include "detail/reduced_problem.hpp"

namespace bernlab {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// The linear program
//   min sum_i t_i  s.t.  t_i >= u_k . (w_i f_i - w_i A_i C)  for every direction u_k,
// where C holds the real (and imaginary) coefficient columns. The directions
// are +-1 for real data and the outward normals of a regular polygon for
// complex data, so t_i bounds the weighted residual modulus from outside.
// Folding the quadrature weights into the rows keeps every node's multipliers
// in [0, 1]; graded grids have weights spanning hundreds of decades.
struct L1Program {
  MatrixXd design;                   // N x m, rows scaled by w_i
  VectorXd weights;                  // objective weights, all 1
  MatrixXd targets;                  // N x D
  MatrixXd directions;               // K x D
};

struct L1Solution {
  MatrixXd coeffs;  // m x D
  int iterations = 0;
  bool converged = false;
};

double max_step(const VectorXd& x, const VectorXd& dx) {
  double step = 1.0;
  for (Index i = 0; i < x.size(); ++i) {
    if (dx[i] < 0.0) step = std::min(step, -x[i] / dx[i]);
  }
  return step;
}

// Mehrotra predictor-corrector on the primal-dual system. Eliminating slacks,
// multipliers and the epigraph variables leaves a dense system of size m*D
// built from D x D blocks B_i per node: sum_i B_i (x) a_i a_i^T.
L1Solution solve_program(const L1Program& lp, const MatrixXd& start, int max_iterations) {
  const MatrixXd& A = lp.design;
  const Index n = A.rows();
  const Index m = A.cols();
  const Index dim = lp.targets.cols();
  const Index k_count = lp.directions.rows();
  const Index unknowns = m * dim;

  MatrixXd coeffs = start;
  // h_ik = u_k . f_i and the projections u_k . (A_i C).
  const MatrixXd h = lp.targets * lp.directions.transpose();  // N x K
  auto projections = [&](const MatrixXd& c) -> MatrixXd { return (A * c) * lp.directions.transpose(); };

  MatrixXd proj = projections(coeffs);
  VectorXd t(n);
  MatrixXd s(n, k_count);
  MatrixXd lambda(n, k_count);
  const double spread = std::max((h - proj).cwiseAbs().maxCoeff(), 1e-8);
  for (Index i = 0; i < n; ++i) {
    const double top = (h.row(i) - proj.row(i)).maxCoeff();
    t[i] = top + 0.1 * spread;
    for (Index k = 0; k < k_count; ++k) {
      s(i, k) = t[i] + proj(i, k) - h(i, k);
      lambda(i, k) = lp.weights[i] / static_cast<double>(k_count);
    }
  }
  const double total_constraints = static_cast<double>(n * k_count);
  const double weight_scale = lp.weights.maxCoeff();

  L1Solution out;
  for (int it = 1; it <= max_iterations; ++it) {
    out.iterations = it;
    proj = projections(coeffs);
    // Residuals of the optimality conditions.
    MatrixXd r_primal = s - (t.replicate(1, k_count) + proj - h);
    VectorXd r_t = lp.weights - lambda.rowwise().sum();
    // Dual stationarity in the coefficients: sum_ik lambda_ik u_k (x) a_i.
    MatrixXd lu = lambda * lp.directions;  // N x D
    MatrixXd r_x = -(A.transpose() * lu);  // m x D
    const double mu = (s.cwiseProduct(lambda)).sum() / total_constraints;
    const double objective = lp.weights.dot(t);
    const double infeasibility =
        std::max({r_primal.cwiseAbs().maxCoeff(), r_t.cwiseAbs().maxCoeff() / weight_scale,
                  r_x.cwiseAbs().maxCoeff() / weight_scale});
    if (mu * total_constraints <= 1e-12 * std::max(objective, 1e-3) && infeasibility <= 1e-10) {
      out.converged = true;
      break;
    }

    const MatrixXd d = lambda.cwiseQuotient(s);
    const VectorXd d_sum = d.rowwise().sum();
    const MatrixXd du = d * lp.directions;  // N x D, the vectors sum_k d_ik u_k

    // Assemble sum_i B_i (x) a_i a_i^T.
    MatrixXd system = MatrixXd::Zero(unknowns, unknowns);
    for (Index p = 0; p < dim; ++p) {
      for (Index q = p; q < dim; ++q) {
        VectorXd b(n);
        for (Index i = 0; i < n; ++i) {
          double sum = 0.0;
          for (Index k = 0; k < k_count; ++k) sum += d(i, k) * lp.directions(k, p) * lp.directions(k, q);
          b[i] = sum - du(i, p) * du(i, q) / d_sum[i];
        }
        const MatrixXd block = A.transpose() * b.asDiagonal() * A;
        system.block(p * m, q * m, m, m) = block;
        if (p != q) system.block(q * m, p * m, m, m) = block.transpose();
      }
    }
    const double ridge = 1e-14 * std::max(system.diagonal().cwiseAbs().maxCoeff(), 1e-300);
    system.diagonal().array() += ridge;
    const Eigen::LDLT<MatrixXd> factor(system);

    // Newton direction for a given complementarity target rc = sigma mu - s lambda (- corrections).
    auto direction = [&](const MatrixXd& rc, MatrixXd& ds, MatrixXd& dl, VectorXd& dt, MatrixXd& dc) {
      const MatrixXd e = rc.cwiseQuotient(lambda) + r_primal;
      const MatrixXd de = d.cwiseProduct(e);
      const VectorXd de_sum = de.rowwise().sum();
      const MatrixXd deu = de * lp.directions;  // N x D
      // Right-hand side sum_ik d e g - sum_i q_i (E_i - r_t_i) / D_i - r_x.
      MatrixXd node_rhs(n, dim);
      for (Index i = 0; i < n; ++i) {
        const double factor_i = (de_sum[i] - r_t[i]) / d_sum[i];
        for (Index p = 0; p < dim; ++p) node_rhs(i, p) = deu(i, p) - du(i, p) * factor_i;
      }
      const MatrixXd rhs = A.transpose() * node_rhs - r_x;
      VectorXd flat(unknowns);
      for (Index p = 0; p < dim; ++p) flat.segment(p * m, m) = rhs.col(p);
      const VectorXd sol = factor.solve(flat);
      dc.resize(m, dim);
      for (Index p = 0; p < dim; ++p) dc.col(p) = sol.segment(p * m, m);
      const MatrixXd dproj = projections(dc);  // N x K, g_ik . dx
      const MatrixXd adc = A * dc;              // N x D
      dt.resize(n);
      for (Index i = 0; i < n; ++i) {
        double q_dx = 0.0;
        for (Index p = 0; p < dim; ++p) q_dx += du(i, p) * adc(i, p);
        dt[i] = (de_sum[i] - r_t[i] - q_dx) / d_sum[i];
      }
      // Slacks from the linear constraints, multipliers from complementarity.
      ds = dt.replicate(1, k_count) + dproj - r_primal;
      dl = (rc - lambda.cwiseProduct(ds)).cwiseQuotient(s);
    };

    auto flat_view = [](const MatrixXd& x) { return Eigen::Map<const VectorXd>(x.data(), x.size()); };

    MatrixXd ds_aff, dl_aff, dc_aff;
    VectorXd dt_aff;
    const MatrixXd rc_aff = -s.cwiseProduct(lambda);
    direction(rc_aff, ds_aff, dl_aff, dt_aff, dc_aff);
    const VectorXd s_flat = flat_view(s);
    const VectorXd l_flat = flat_view(lambda);
    const double ap_aff = max_step(s_flat, flat_view(ds_aff));
    const double ad_aff = max_step(l_flat, flat_view(dl_aff));
    const double mu_aff =
        ((s + ap_aff * ds_aff).cwiseProduct(lambda + ad_aff * dl_aff)).sum() / total_constraints;
    const double sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3.0);

    MatrixXd ds, dl, dc;
    VectorXd dt;
    const MatrixXd rc = MatrixXd::Constant(n, k_count, sigma * mu) - s.cwiseProduct(lambda) -
                        ds_aff.cwiseProduct(dl_aff);
    direction(rc, ds, dl, dt, dc);
    const double ap = std::min(1.0, 0.99 * max_step(s_flat, flat_view(ds)));
    const double ad = std::min(1.0, 0.99 * max_step(l_flat, flat_view(dl)));
    s += ap * ds;
    t += ap * dt;
    coeffs += ap * dc;
    lambda += ad * dl;
    if (!coeffs.allFinite() || !s.allFinite() || !lambda.allFinite()) {
      raise(ErrorKind::lp_infeasible, "interior-point iterates lost finiteness");
    }
  }
  out.coeffs = coeffs;
  return out;
}

double weighted_l1(const MatrixXd& A, const Eigen::VectorXcd& values, const VectorXd& weights,
                   const Eigen::VectorXcd& c) {
  return weights.dot((values - A.cast<std::complex<double>>() * c).cwiseAbs());
}

// Weiszfeld-type reweighting toward the true modulus objective; only
// improving steps are kept.
Eigen::VectorXcd polish(const MatrixXd& A, const Eigen::VectorXcd& values, const VectorXd& weights,
                        Eigen::VectorXcd c, double floor) {
  double best = weighted_l1(A, values, weights, c);
  for (int it = 0; it < 50; ++it) {
    const VectorXd modulus = (values - A.cast<std::complex<double>>() * c).cwiseAbs();
    const VectorXd w = weights.cwiseQuotient(modulus.cwiseMax(floor));
    const Eigen::VectorXcd next = detail::weighted_least_squares(A, w, values);
    const double value = weighted_l1(A, values, weights, next);
    if (!(value < best * (1.0 - 1e-13))) break;
    best = value;
    c = next;
  }
  return c;
}

// The L1 objective of a real residual g - sum_j c_j T_basis[j] on [-1, 1],
// with panels split at the residual's zeros so no Gauss rule straddles a kink.
// The Hessian comes from moving the zeros: 2 phi(z) phi(z)^T / |r'(z)|.
struct SplitL1 {
  double value = 0.0;
  VectorXd gradient;
  MatrixXd hessian;
};

SplitL1 split_l1(const detail::ReducedProblem& rd, const VectorXd& c) {
  const auto m = static_cast<Index>(rd.basis.size());
  std::vector<double> full(static_cast<std::size_t>(rd.degree) + 1, 0.0);
  for (Index j = 0; j < m; ++j) full[static_cast<std::size_t>(rd.basis[static_cast<std::size_t>(j)])] = c[j];
  const auto residual = [&](double t) { return rd.g(t).real() - clenshaw<double>(full, t); };
  const auto phi = [&](double t) -> VectorXd {
    const std::array<double, 1> at{t};
    return detail::basis_matrix(at, rd.basis, rd.degree).row(0).transpose();
  };
  const GaussRule rule = gauss_legendre(rd.grid.nodes_per_panel());

  SplitL1 out;
  out.gradient = VectorXd::Zero(m);
  out.hessian = MatrixXd::Zero(m, m);
  // Adds the integral of |r| and of -sign(r) phi over x(u), u in [lo, hi].
  const auto accumulate = [&](double lo, double hi, const std::function<double(double)>& x,
                              const std::function<double(double)>& jacobian) {
    std::vector<double> ts(rule.nodes.size());
    std::vector<double> ws(rule.nodes.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double u = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes[i];
      ts[i] = x(u);
      ws[i] = 0.5 * (hi - lo) * rule.weights[i] * jacobian(u);
    }
    const MatrixXd rows = detail::basis_matrix(ts, rd.basis, rd.degree);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double r = residual(ts[i]);
      out.value += ws[i] * std::abs(r);
      if (r != 0.0) out.gradient -= (r > 0.0 ? ws[i] : -ws[i]) * rows.row(static_cast<Index>(i)).transpose();
    }
  };
  const auto identity = [](double u) { return u; };
  const auto unit = [](double) { return 1.0; };

  // Scanned left to right; the sign carries across panels so a crossing hidden
  // inside the origin panels is still seen, and is placed at 0.
  double sign = 0.0;
  double pending = std::numeric_limits<double>::quiet_NaN();
  bool origin_gap = false;
  for (const Panel& panel : rd.grid.panels()) {
    if (rd.even && panel.hi <= 0.0) continue;
    if (panel.at_origin) {
      const double edge = panel.lo == 0.0 ? panel.hi : panel.lo;
      accumulate(0.0, 1.0, [&](double u) { return edge * std::pow(u, 8); },
                 [&](double u) { return 8.0 * std::abs(edge) * std::pow(u, 7); });
      origin_gap = true;
      continue;
    }
    std::vector<double> ts{panel.lo};
    for (double x : rule.nodes) ts.push_back(0.5 * (panel.lo + panel.hi) + 0.5 * (panel.hi - panel.lo) * x);
    ts.push_back(panel.hi);
    std::vector<double> roots;
    // LP vertices often interpolate exactly at a node, so exact zeros are kept
    // as candidates until the sign on the far side confirms a crossing.
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double current = residual(ts[i]);
      if (current == 0.0) {
        if (std::isnan(pending)) pending = ts[i];
      } else {
        const double now = current > 0.0 ? 1.0 : -1.0;
        if (sign != 0.0 && now != sign) {
          if (!std::isnan(pending)) {
            roots.push_back(pending);
          } else if (i == 0) {
            if (origin_gap) roots.push_back(0.0);
          } else {
            roots.push_back(bracketed_root(residual, ts[i - 1], ts[i], 1e-15 * (panel.hi - panel.lo)));
          }
        }
        pending = std::numeric_limits<double>::quiet_NaN();
        sign = now;
      }
    }
    origin_gap = false;
    std::vector<double> cuts{panel.lo};
    for (double z : roots) {
      if (z > panel.lo && z < panel.hi) cuts.push_back(z);
      const double h = std::max(1e-6 * (panel.hi - panel.lo), 1e-9);
      const double lo = std::max(z - h, -1.0);
      const double hi = std::min(z + h, 1.0);
      const double slope = std::abs(residual(hi) - residual(lo)) / (hi - lo);
      if (slope > 0.0 && std::isfinite(slope)) {
        const VectorXd at = phi(z);
        out.hessian += (2.0 / slope) * at * at.transpose();
      }
    }
    cuts.push_back(panel.hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) accumulate(cuts[i], cuts[i + 1], identity, unit);
  }
  if (rd.even) {
    out.value *= 2.0;
    out.gradient *= 2.0;
    out.hessian *= 2.0;
  }
  return out;
}

// Damped Newton on the continuous L1 objective, started from the discrete
// optimum. Only decreasing steps are taken.
int newton_polish(const detail::ReducedProblem& rd, VectorXd& c, SplitL1& current) {
  int steps = 0;
  for (int it = 0; it < 40; ++it) {
    const double ridge = 1e-14 * std::max(current.hessian.trace(), 1e-300);
    const MatrixXd h = current.hessian + ridge * MatrixXd::Identity(c.size(), c.size());
    const VectorXd step = -h.ldlt().solve(current.gradient);
    if (!step.allFinite()) break;
    double scale = 1.0;
    bool moved = false;
    for (int back = 0; back < 30; ++back) {
      const VectorXd trial = c + scale * step;
      SplitL1 next = split_l1(rd, trial);
      if (next.value < current.value) {
        const double gain = current.value - next.value;
        c = trial;
        current = std::move(next);
        moved = gain > 1e-15 * current.value;
        break;
      }
      scale *= 0.5;
    }
    ++steps;
    if (!moved) break;
  }
  return steps;
}

}  // namespace

ApproxResult best_l1(const ApproxProblem& problem) {
  if (problem.pnorm.is_infinite() || problem.pnorm.p() != 1.0) {
    raise(ErrorKind::domain, "best_l1 needs p = 1");
  }
  const detail::ReducedProblem rd = detail::reduce(problem);
  const Eigen::VectorXcd raw = detail::sample(rd.g, rd.quad_nodes);
  const MatrixXd design = detail::basis_matrix(rd.quad_nodes, rd.basis, rd.degree);
  const auto m = static_cast<Index>(rd.basis.size());
  const VectorXd quad = Eigen::Map<const VectorXd>(rd.quad_weights.data(),
                                                   static_cast<Index>(rd.quad_weights.size()));
  const double total_weight = quad.sum();
  const VectorXd weights = quad / total_weight;
  const double fscale = std::max(raw.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const Eigen::VectorXcd values = raw / fscale;

  const Eigen::VectorXcd start = detail::weighted_least_squares(design, weights, values);
  const Eigen::VectorXcd start_residual = values - design.cast<std::complex<double>>() * start;
  Eigen::VectorXcd c = start;
  int iterations = 0;
  bool converged = true;
  std::string method = "least_squares_exact";
  if (start_residual.cwiseAbs().maxCoeff() > 1e-13) {
    const bool complex_data = !problem.real_valued;
    const Index dim = complex_data ? 2 : 1;
    const Index k_count = complex_data ? problem.limits.l1_directions : 2;
    if (k_count < 3 && complex_data) raise(ErrorKind::domain, "complex L1 needs at least 3 directions");
    L1Program lp;
    lp.design = weights.asDiagonal() * design;
    lp.weights = VectorXd::Ones(values.size());
    lp.targets.resize(values.size(), dim);
    lp.targets.col(0) = weights.cwiseProduct(values.real());
    if (complex_data) lp.targets.col(1) = weights.cwiseProduct(values.imag());
    lp.directions.resize(k_count, dim);
    for (Index k = 0; k < k_count; ++k) {
      if (complex_data) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(k_count);
        lp.directions(k, 0) = std::cos(angle);
        lp.directions(k, 1) = std::sin(angle);
      } else {
        lp.directions(k, 0) = k == 0 ? 1.0 : -1.0;
      }
    }
    MatrixXd initial(m, dim);
    initial.col(0) = start.real();
    if (complex_data) initial.col(1) = start.imag();
    const L1Solution sol = solve_program(lp, initial, problem.limits.interior_point_iterations);
    iterations = sol.iterations;
    converged = sol.converged;
    for (Index j = 0; j < m; ++j) {
      c[j] = {sol.coeffs(j, 0), complex_data ? sol.coeffs(j, 1) : 0.0};
    }
    method = complex_data ? "interior_point_polygon" : "interior_point";
    if (complex_data) {
      c = polish(design, values, weights, c, 1e-12);
      method += "+reweighting";
    }
  }
  c *= fscale;

  double error = 0.0;
  if (problem.real_valued) {
    VectorXd real_c = c.real();
    SplitL1 current = split_l1(rd, real_c);
    if (method != "least_squares_exact") {
      iterations += newton_polish(rd, real_c, current);
      method += "+newton";
      c = real_c.cast<std::complex<double>>();
    }
    error = current.value;
  } else {
    error = weighted_l1(design, raw, quad, c);
  }

  std::vector<std::complex<double>> coeffs(c.data(), c.data() + m);
  ApproxResult result;
  result.error = error * detail::norm_scale(problem);
  result.polynomial = detail::make_polynomial(rd, problem, coeffs);
  result.pnorm = problem.pnorm;
  result.interval = problem.interval;
  result.degree = problem.degree;
  result.discretized = false;
  result.discretization_note = detail::grid_note(problem, rd.grid);
  result.diagnostics.method = method;
  result.diagnostics.iterations = iterations;
  result.diagnostics.converged = converged;

  if (problem.real_valued) {
    // Sign changes over the whole interval, not only the solved half.
    const auto nodes = rd.grid.nodes();
    std::vector<double> residual(nodes.size());
    const auto full = detail::expand(rd, coeffs);
    double peak = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      residual[i] = rd.g(nodes[i]).real() - clenshaw<std::complex<double>>(full, nodes[i]).real();
      peak = std::max(peak, std::abs(residual[i]));
    }
    auto changes = detail::sign_change_points(nodes, residual, 1e-9 * peak);
    for (double& t : changes) t = rd.midpoint + rd.half_width * t;
    result.diagnostics.sign_changes = std::move(changes);
  }
  return result;
}

}  // namespace bernlab
