#include "bernlab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <numbers>

namespace bernlab {

namespace {

struct RowOutcome {
  ConvergenceRow row;
  std::exception_ptr failure;
};

RowOutcome solve_row(const FunctionSpec& spec, const PNorm& p, int n, const TableOptions& options) {
  RowOutcome outcome;
  try {
    ApproxProblem problem = ApproxProblem::for_spec(spec, n, p);
    problem.grid.ratio = options.grid.ratio;
    problem.grid.origin_floor = options.grid.origin_floor;
    problem.grid.nodes_per_panel = options.grid.nodes_per_panel;
    problem.grid.max_panel_width = options.grid.max_panel_width;
    problem.limits = options.limits;
    const ApproxResult result = solve(problem);
    outcome.row.n = n;
    outcome.row.error = result.error;
    outcome.row.scaled = std::pow(static_cast<double>(n), scaling_exponent(spec, p)) * result.error;
    outcome.row.converged = result.diagnostics.converged;
    outcome.row.discretized = result.discretized;
  } catch (...) {
    outcome.failure = std::current_exception();
  }
  return outcome;
}

// Smallest distance from x to a multiple of pi.
double distance_to_pi_multiple(double x) {
  const double r = std::remainder(x, std::numbers::pi);
  return std::abs(r);
}

}  // namespace

std::string to_string(ExtrapolationMethod method) {
  return method == ExtrapolationMethod::aitken ? "aitken" : "richardson_1overN";
}

ExtrapolationMethod parse_extrapolation(std::string_view text) {
  if (text == "aitken") return ExtrapolationMethod::aitken;
  if (text == "richardson_1overN" || text == "richardson") return ExtrapolationMethod::richardson_1overN;
  raise(ErrorKind::domain, "unknown extrapolation method '" + std::string(text) + "'");
}

double scaling_exponent(const FunctionSpec& spec, const PNorm& p) { return spec.alpha() + p.inverse(); }

std::optional<BernsteinConstant> reference_constant(const FunctionSpec& spec, const PNorm& p) {
  if (!spec.has_unit_weights()) return std::nullopt;
  const bool real_part = spec.variant() != Variant::sin_part;
  if (p.is_infinite()) {
    if (spec.alpha() == 0.0 && spec.beta() != 0.0) return bernstein_linf_log(spec.beta(), 1.0, spec.variant());
    return std::nullopt;
  }
  if (p.p() == 1.0 && spec.beta() == 0.0 && real_part) return bernstein_l1(spec.alpha());
  if (p.p() == 2.0 && spec.alpha() > -0.5 && std::abs(spec.beta()) <= kMaxL2Beta) {
    if (spec.beta() == 0.0 && real_part) return bernstein_l2_real(spec.alpha());
    if (spec.variant() == Variant::full) return bernstein_l2(spec.alpha(), spec.beta());
  }
  return std::nullopt;
}

ConvergenceReport scaled_error_table(const FunctionSpec& spec, const PNorm& p,
                                     std::span<const int> degrees, const TableOptions& options) {
  if (degrees.empty()) raise(ErrorKind::domain, "degree list is empty");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1) raise(ErrorKind::domain, "table degrees must be positive");
    if (i > 0 && degrees[i] <= degrees[i - 1]) raise(ErrorKind::domain, "table degrees must increase");
  }
  ConvergenceReport report;
  report.spec = spec;
  report.p = p;
  report.reference = reference_constant(spec, p);

  std::vector<RowOutcome> outcomes;
  if (options.parallel) {
    std::vector<std::future<RowOutcome>> futures;
    for (int n : degrees) {
      futures.push_back(std::async(std::launch::async, solve_row, std::cref(spec), std::cref(p), n,
                                   std::cref(options)));
    }
    for (auto& f : futures) outcomes.push_back(f.get());
  } else {
    for (int n : degrees) {
      outcomes.push_back(solve_row(spec, p, n, options));
      if (outcomes.back().failure) break;
    }
  }
  for (const RowOutcome& outcome : outcomes) {
    if (outcome.failure) {
      report.partial = true;
      try {
        std::rethrow_exception(outcome.failure);
      } catch (const Error& e) {
        report.failure_kind = e.kind();
        report.failure = e.what();
      } catch (const std::exception& e) {
        report.failure = e.what();
      }
      break;
    }
    report.rows.push_back(outcome.row);
  }
  if (report.rows.size() >= 3) {
    report.limit = extrapolate_limit(report, options.method);
    if (report.reference && report.reference->value != 0.0) {
      report.relative_gap = std::abs(report.limit->value - report.reference->value) / report.reference->value;
    }
  }
  return report;
}

LimitEstimate extrapolate_limit(std::span<const int> ns, std::span<const double> scaled,
                                ExtrapolationMethod method) {
  if (ns.size() != scaled.size()) raise(ErrorKind::domain, "degree and value columns differ in length");
  if (scaled.size() < 3) raise(ErrorKind::domain, "extrapolation needs at least three rows");
  for (double s : scaled) {
    if (!std::isfinite(s)) raise(ErrorKind::non_finite, "scaled column is not finite");
  }
  std::vector<double> estimates;
  if (method == ExtrapolationMethod::richardson_1overN) {
    for (std::size_t i = 1; i < scaled.size(); ++i) {
      const double n1 = ns[i - 1];
      const double n2 = ns[i];
      if (!(n2 > n1)) raise(ErrorKind::domain, "Richardson extrapolation needs increasing degrees");
      estimates.push_back((n2 * scaled[i] - n1 * scaled[i - 1]) / (n2 - n1));
    }
  } else {
    for (std::size_t i = 2; i < scaled.size(); ++i) {
      const double d1 = scaled[i] - scaled[i - 1];
      const double d0 = scaled[i - 1] - scaled[i - 2];
      const double denom = d1 - d0;
      const double scale = std::max({std::abs(scaled[i]), std::abs(scaled[i - 1]), std::abs(scaled[i - 2])});
      estimates.push_back(std::abs(denom) <= 1e-15 * scale ? scaled[i] : scaled[i] - d1 * d1 / denom);
    }
  }
  LimitEstimate out;
  out.method = method;
  out.value = estimates.back();
  // Successive estimates should settle; growing increments mean the model fails.
  for (std::size_t i = 2; i < estimates.size(); ++i) {
    const double previous = std::abs(estimates[i - 1] - estimates[i - 2]);
    const double current = std::abs(estimates[i] - estimates[i - 1]);
    const double floor = 1e-12 * std::max(1.0, std::abs(estimates[i]));
    if (current > previous && current > floor) {
      out.stable = false;
      out.value = estimates[i - 1];
      break;
    }
  }
  return out;
}

LimitEstimate extrapolate_limit(const ConvergenceReport& report, ExtrapolationMethod method) {
  std::vector<int> ns;
  std::vector<double> scaled;
  for (const ConvergenceRow& row : report.rows) {
    ns.push_back(row.n);
    scaled.push_back(row.scaled);
  }
  return extrapolate_limit(ns, scaled, method);
}

std::string to_string(SubsequenceKind kind) {
  return kind == SubsequenceKind::cos_locked ? "cos_locked" : "sin_locked";
}

SubsequenceKind parse_subsequence_kind(std::string_view text) {
  if (text == "cos_locked" || text == "cos") return SubsequenceKind::cos_locked;
  if (text == "sin_locked" || text == "sin") return SubsequenceKind::sin_locked;
  raise(ErrorKind::domain, "unknown subsequence kind '" + std::string(text) + "'");
}

SubsequencePlan subsequence_degrees(double beta, SubsequenceKind kind, std::span<const int> ks) {
  if (!std::isfinite(beta) || beta == 0.0) raise(ErrorKind::domain, "subsequences need beta != 0");
  SubsequencePlan plan;
  plan.beta = beta;
  plan.kind = kind;
  const double b = std::abs(beta);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const int k = ks[i];
    if (k < 1) raise(ErrorKind::domain, "subsequence indices must be positive");
    if (i > 0 && k <= ks[i - 1]) raise(ErrorKind::domain, "subsequence indices must increase");
    const double phase = kind == SubsequenceKind::cos_locked ? std::numbers::pi * k
                                                             : (2.0 * k + 1.0) * std::numbers::pi / 2.0;
    const double dilation = std::exp(phase / b);
    if (!(dilation <= kMaxDilation)) raise(ErrorKind::overflow, "dilation exceeds 1e15");
    plan.ks.push_back(k);
    plan.dilations.push_back(dilation);
    plan.degrees.push_back(static_cast<long long>(std::floor(dilation)));
  }
  return plan;
}

std::vector<double> phase_residuals(const SubsequencePlan& plan) {
  std::vector<double> out;
  const double offset = plan.kind == SubsequenceKind::cos_locked ? 0.0 : std::numbers::pi / 2.0;
  for (double a : plan.dilations) {
    const double phase = plan.beta * std::log(a);
    out.push_back(distance_to_pi_multiple(phase - offset));
  }
  return out;
}

ScalingReport scaling_identity_check(const FunctionSpec& spec, const PNorm& p, int degree, double eta,
                                     double half_width, const GridOptions& grid) {
  if (!std::isfinite(eta) || eta == 0.0) raise(ErrorKind::domain, "eta must be finite and nonzero");
  ApproxProblem left = ApproxProblem::for_spec(spec, degree, p, half_width);
  left.grid.ratio = grid.ratio;
  left.grid.origin_floor = grid.origin_floor;
  left.grid.nodes_per_panel = grid.nodes_per_panel;
  left.grid.max_panel_width = grid.max_panel_width;

  ApproxProblem right = left;
  right.spec.reset();
  right.target = [spec, eta](double x) { return spec(eta * x); };
  right.interval = symmetric_interval(half_width / std::abs(eta));

  ScalingReport report;
  report.eta = eta;
  report.half_width = half_width;
  report.lhs = solve(left).error;
  report.rhs = std::pow(std::abs(eta), p.inverse()) * solve(right).error;
  const double scale = std::max(report.lhs, report.rhs);
  report.discrepancy = scale > 0.0 ? std::abs(report.lhs - report.rhs) / scale : 0.0;
  return report;
}

TransferReport dilation_transfer_check(double beta, int k, int degree, const GridOptions& grid) {
  if (!std::isfinite(beta) || beta == 0.0) raise(ErrorKind::domain, "dilation transfer needs beta != 0");
  const std::vector<int> ks{k};
  const SubsequencePlan plan = subsequence_degrees(beta, SubsequenceKind::cos_locked, ks);
  const FunctionSpec spec(0.0, beta, Variant::cos_part);
  TransferReport report;
  report.beta = beta;
  report.k = k;
  report.dilation = plan.dilations.front();
  report.degree = degree;
  auto run = [&](double half_width) {
    ApproxProblem problem = ApproxProblem::for_spec(spec, degree, PNorm::infinity(), half_width);
    problem.grid.ratio = grid.ratio;
    problem.grid.origin_floor = grid.origin_floor;
    problem.grid.nodes_per_panel = grid.nodes_per_panel;
    problem.grid.max_panel_width = grid.max_panel_width;
    return solve(problem).error;
  };
  report.on_unit = run(1.0);
  report.on_dilated = run(1.0 / report.dilation);
  const double scale = std::max(report.on_unit, report.on_dilated);
  report.discrepancy = scale > 0.0 ? std::abs(report.on_unit - report.on_dilated) / scale : 0.0;
  return report;
}

std::string to_string(DecayTestFunction fn) {
  switch (fn) {
    case DecayTestFunction::cosine: return "cosine";
    case DecayTestFunction::sinc_power: return "sinc_power";
    case DecayTestFunction::constant: return "constant";
  }
  return "cosine";
}

DecayTestFunction parse_decay_function(std::string_view text) {
  if (text == "cosine") return DecayTestFunction::cosine;
  if (text == "sinc_power") return DecayTestFunction::sinc_power;
  if (text == "constant") return DecayTestFunction::constant;
  raise(ErrorKind::domain, "unknown test function '" + std::string(text) + "'");
}

DecayBoundParams DecayBoundParams::make(double sigma, double tau, double C) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) raise(ErrorKind::domain, "sigma must be positive");
  if (!(tau > 0.0 && tau < 1.0)) raise(ErrorKind::domain, "tau must lie in (0, 1)");
  if (!(C >= 0.0) || !std::isfinite(C)) raise(ErrorKind::domain, "C must be nonnegative");
  DecayBoundParams params;
  params.sigma = sigma;
  params.tau = tau;
  params.C = C;
  const double root = std::sqrt(1.0 - tau * tau);
  params.C7 = 2.0 * tau * std::exp(C * root) / root;
  params.C8 = std::log1p(root) - std::log(tau) - root;
  return params;
}

double decay_function_norm(DecayTestFunction) { return 1.0; }

double decay_function_value(DecayTestFunction fn, double sigma, double x) {
  switch (fn) {
    case DecayTestFunction::cosine: return std::cos(sigma * x);
    case DecayTestFunction::sinc_power: {
      const double u = 0.5 * sigma * x;
      if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        const double sinc = 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
        return sinc * sinc;
      }
      const double sinc = std::sin(u) / u;
      return sinc * sinc;
    }
    case DecayTestFunction::constant: return 1.0;
  }
  return 0.0;
}

DecayBoundReport decay_bound_check(DecayTestFunction fn, double sigma, double tau, double C,
                                   std::span<const int> degrees) {
  DecayBoundReport report;
  report.function = fn;
  report.params = DecayBoundParams::make(sigma, tau, C);
  report.sup_norm = decay_function_norm(fn);
  report.pass = true;
  for (int n : degrees) {
    if (n < 1) raise(ErrorKind::domain, "decay bound degrees must be positive");
    DecayBoundRow row;
    row.n = n;
    row.half_width = (n + C) * tau / sigma;
    ApproxProblem problem = ApproxProblem::for_function(
        [fn, sigma](double x) { return std::complex<double>(decay_function_value(fn, sigma, x), 0.0); },
        true, n, PNorm::infinity(), symmetric_interval(row.half_width));
    problem.symmetry = SymmetryHint::even;
    const ApproxResult result = remez_linf(problem);
    row.error = result.error;
    row.converged = result.diagnostics.converged;
    row.bound = report.params.C7 * std::exp(-report.params.C8 * n) * report.sup_norm;
    row.margin = row.bound - row.error;
    row.pass = row.error <= row.bound;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace bernlab
