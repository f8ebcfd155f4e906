// Acceptance suite: one PASS/FAIL line per criterion, exit status = number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bernlab/bernlab.hpp"

using namespace bernlab;
using std::numbers::pi;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0.0) v.require(elapsed < time_limit_s, "runtime limit " + fmt("%.0f s", time_limit_s));
  if (!v.pass) ++failures;
  std::printf("%s [%d] %s (%.2fs): %s\n", v.pass ? "PASS" : "FAIL", id, title, elapsed, v.detail.c_str());
  std::fflush(stdout);
}

double richardson_limit(const FunctionSpec& spec, const PNorm& p, Verdict& v) {
  const std::vector<int> ns{8, 16, 32, 64};
  TableOptions options;
  options.parallel = true;
  const ConvergenceReport report = scaled_error_table(spec, p, ns, options);
  v.require(!report.partial, "table complete");
  v.require(std::all_of(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.converged; }),
            "all rows converged");
  v.require(report.limit.has_value(), "limit estimate");
  std::string column;
  for (const auto& row : report.rows) column += (column.empty() ? "" : ",") + fmt("%.6f", row.scaled);
  v.note("scaled=[" + column + "]");
  return report.limit ? report.limit->value : std::nan("");
}

double grid_sup(const ApproxProblem& problem) {
  return lp_quasinorm(problem.target, problem.interval, PNorm::infinity(), problem.make_grid());
}

}  // namespace

int main() {
  criterion(1, "mu constant", 1.0, [](Verdict& v) {
    const double mu = mu_constant(1e-12);
    const double residual = std::abs(mu_equation(mu));
    v.require(std::abs(mu - 1.508879) <= 1e-6, "|mu - 1.508879| <= 1e-6");
    v.require(residual <= 1e-12, "residual <= 1e-12");
    v.note(fmt("mu=%.12f", mu) + fmt(" residual=%.1e", residual));
  });

  criterion(2, "closed-form constants", 1.0, [](Verdict& v) {
    const double l1 = bernstein_l1(1.0).value;
    const double l2a = bernstein_l2(0.5, 0.0).value;
    const double l2b = bernstein_l2(0.0, 1.0).value;
    const double d1 = std::abs(l1 - pi * pi / 4.0);
    const double d2 = std::abs(l2a - 0.5);
    const double d3 = std::abs(l2b - std::sqrt(2.0 * std::tanh(pi / 2.0)));
    v.require(d1 <= 1e-10, "A_1(|x|) = pi^2/4 within 1e-10");
    v.require(d2 <= 1e-12, "A_2(|x|^0.5) = 1/2 within 1e-12");
    v.require(d3 <= 1e-10, "A_2(|x|^i) = sqrt(2 tanh(pi/2)) within 1e-10");
    v.note(fmt("dev=%.1e", d1) + fmt(",%.1e", d2) + fmt(",%.1e", d3));
  });

  criterion(3, "Remez on |x|, n = 2", 1.0, [](Verdict& v) {
    const ApproxResult r = remez_linf(ApproxProblem::for_spec(FunctionSpec(1.0, 0.0), 2, PNorm::infinity()));
    v.require(std::abs(r.error - 0.125) <= 1e-8, "E_2 = 1/8 within 1e-8");
    v.require(r.diagnostics.alternation.size() >= 4, "at least 4 alternation points");
    v.note(fmt("E=%.15f", r.error) + " alternation=" + std::to_string(r.diagnostics.alternation.size()));
  });

  criterion(4, "L2 scaled limit, Richardson over n = 8..64", 120.0, [](Verdict& v) {
    const double a = richardson_limit(FunctionSpec(0.5, 0.0), PNorm(2.0), v);
    const double ref_b = bernstein_l2(0.5, 1.0).value;
    const double b = richardson_limit(FunctionSpec(0.5, 1.0), PNorm(2.0), v);
    const double gap_a = std::abs(a - 0.5) / 0.5;
    const double gap_b = std::abs(b - ref_b) / ref_b;
    v.require(gap_a <= 0.02, "beta = 0 within 2% of 0.5");
    v.require(gap_b <= 0.02, "beta = 1 within 2% of the closed form");
    v.note(fmt("limit=%.6f", a) + fmt(" gap=%.2f%%", 100 * gap_a) + fmt("; limit=%.6f", b) + fmt(" ref=%.6f", ref_b) +
           fmt(" gap=%.2f%%", 100 * gap_b));
  });

  criterion(5, "L1 scaled limit, Richardson over n = 8..64", 300.0, [](Verdict& v) {
    const double ref = bernstein_l1(0.5).value;
    const double limit = richardson_limit(FunctionSpec(0.5, 0.0), PNorm(1.0), v);
    const double gap = std::abs(limit - ref) / ref;
    v.require(gap <= 0.02, "within 2% of A_1(|x|^0.5)");
    v.note(fmt("limit=%.6f", limit) + fmt(" ref=%.6f", ref) + fmt(" gap=%.2f%%", 100 * gap));
  });

  criterion(6, "discrete uniform errors of f_{0,4,c}", 0.0, [](Verdict& v) {
    // Exact arithmetic gives monotone sequences; comparisons allow 1e-12 relative rounding.
    constexpr double slack = 1e-12;
    const FunctionSpec f(0.0, 4.0, Variant::cos_part);
    double previous = 2.0;
    std::string column;
    for (int n : {8, 16, 32}) {
      const ApproxProblem problem = ApproxProblem::for_spec(f, n, PNorm::infinity());
      const ApproxResult r = solve(problem);
      const double zero_poly = grid_sup(problem);
      v.require(r.diagnostics.converged, "n=" + std::to_string(n) + " converged");
      v.require(r.error > 0.0 && r.error <= 1.0, "0 < E_n <= 1");
      v.require(r.error <= zero_poly * (1.0 + slack), "E_n <= error of the zero polynomial");
      v.require(zero_poly <= 1.0 && zero_poly >= 1.0 - 1e-4, "zero polynomial error ~ 1");
      v.require(r.error <= previous * (1.0 + slack), "nonincreasing in n");
      previous = r.error;
      column += (column.empty() ? "" : ",") + fmt("%.13f", r.error);
    }
    std::string refined;
    for (int n : {8, 16}) {
      double last = 0.0;
      for (double floor : {1e-6, 1e-10, 1e-14}) {
        ApproxProblem problem = ApproxProblem::for_spec(f, n, PNorm::infinity());
        problem.grid.origin_floor = floor;
        const double e = solve(problem).error;
        v.require(e >= last * (1.0 - slack), "nondecreasing under refinement (n=" + std::to_string(n) + ")");
        last = e;
        refined += (refined.empty() ? "" : ",") + fmt("%.13f", e);
      }
    }
    v.note("E=[" + column + "] refined=[" + refined + "]");
  });

  criterion(7, "decay bound for cos, tau in {0.3,0.5,0.7}, n = 4..20", 120.0, [](Verdict& v) {
    std::vector<int> ns;
    for (int n = 4; n <= 20; ++n) ns.push_back(n);
    for (double tau : {0.3, 0.5, 0.7}) {
      const DecayBoundReport report = decay_bound_check(DecayTestFunction::cosine, 1.0, tau, 0.0, ns);
      double worst = 1e300;
      for (const auto& row : report.rows) {
        v.require(row.pass, fmt("tau=%.1f", tau) + " n=" + std::to_string(row.n));
        v.require(row.converged, fmt("tau=%.1f", tau) + " n=" + std::to_string(row.n) + " converged");
        worst = std::min(worst, row.bound / std::max(row.error, 1e-300));
      }
      v.note(fmt("tau=%.1f", tau) + fmt(" min bound/error=%.3g", worst));
    }
  });

  criterion(8, "scaling identity on randomised cases", 0.0, [](Verdict& v) {
    std::mt19937 rng(20240601);
    std::uniform_real_distribution<double> alpha_dist(-0.4, 2.0);
    std::uniform_real_distribution<double> beta_dist(-3.0, 3.0);
    std::uniform_real_distribution<double> eta_dist(0.5, 4.0);
    std::uniform_int_distribution<int> degree_dist(0, 8);
    std::uniform_int_distribution<int> variant_dist(0, 2);
    const Variant variants[] = {Variant::full, Variant::cos_part, Variant::sin_part};
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const PNorm p(i % 2 == 0 ? 1.0 : 2.0);
      const FunctionSpec spec(alpha_dist(rng), beta_dist(rng), variants[variant_dist(rng)]);
      const int n = degree_dist(rng);
      const double eta = eta_dist(rng);
      const ScalingReport r = scaling_identity_check(spec, p, n, eta);
      worst = std::max(worst, r.discrepancy);
      v.require(r.discrepancy < 1e-9, spec.describe() + " p=" + p.label() + " n=" + std::to_string(n));
    }
    v.note(fmt("20 cases p in {1,2}: max discrepancy=%.1e", worst));
    std::uniform_real_distribution<double> alpha_inf(0.1, 2.0);
    double worst_inf = 0.0;
    for (int i = 0; i < 6; ++i) {
      const FunctionSpec spec = i == 0 ? FunctionSpec(0.0, 4.0, Variant::cos_part)
                                       : FunctionSpec(alpha_inf(rng), beta_dist(rng), variants[variant_dist(rng)]);
      const int n = degree_dist(rng);
      const ScalingReport r = scaling_identity_check(spec, PNorm::infinity(), n, eta_dist(rng));
      worst_inf = std::max(worst_inf, r.discrepancy);
      v.require(r.discrepancy < 1e-6, spec.describe() + " p=inf n=" + std::to_string(n));
    }
    v.note(fmt("6 cases p=inf: max discrepancy=%.1e", worst_inf));
  });

  criterion(9, "property suites", 0.0, [](Verdict& v) {
    const std::vector<PNorm> norms{PNorm(1.0), PNorm(2.0), PNorm(3.0), PNorm::infinity()};
    int minimax_outputs = 0;
    int coefficient_failures = 0;
    auto check_coefficients = [&](const ApproxResult& r) {
      if (!r.pnorm.is_infinite()) return;
      ++minimax_outputs;
      const CoefficientBoundReport report = coeff_bound_check(r.polynomial, grid_sup_norm(r.polynomial));
      if (!report.pass) ++coefficient_failures;
    };

    // Degree monotonicity.
    for (const FunctionSpec& spec : {FunctionSpec(0.5, 0.0), FunctionSpec(0.5, 1.0), FunctionSpec(1.5, 2.0, Variant::cos_part)}) {
      for (const PNorm& p : norms) {
        double previous = 1e300;
        for (int n = 0; n <= 10; ++n) {
          const ApproxResult r = solve(ApproxProblem::for_spec(spec, n, p));
          check_coefficients(r);
          v.require(r.error <= previous * (1.0 + 1e-8), "monotone in n: " + spec.describe() + " p=" + p.label());
          previous = r.error;
        }
      }
    }

    // Polynomial targets.
    for (double alpha : {2.0, 4.0, 6.0}) {
      for (const PNorm& p : norms) {
        for (int n = static_cast<int>(alpha); n <= static_cast<int>(alpha) + 3; ++n) {
          const ApproxResult r = solve(ApproxProblem::for_spec(FunctionSpec(alpha, 0.0), n, p));
          check_coefficients(r);
          v.require(r.error <= 1e-12, "zero error for x^" + std::to_string(static_cast<int>(alpha)) + " p=" + p.label());
        }
      }
    }

    // Parseval self-consistency.
    double worst_parseval = 0.0;
    for (const FunctionSpec& spec : {FunctionSpec(0.5, 1.0), FunctionSpec(0.0, 1.0), FunctionSpec(-0.25, 2.0),
                                     FunctionSpec(1.0, 0.0), FunctionSpec(0.5, 3.0, Variant::sin_part)}) {
      for (int n : {0, 2, 4, 8}) {
        const ApproxResult r = project_l2(ApproxProblem::for_spec(spec, n, PNorm(2.0)));
        const double rel = std::abs(r.diagnostics.pythagoras_error - r.diagnostics.direct_error) / r.error;
        worst_parseval = std::max(worst_parseval, rel);
        v.require(rel <= 1e-10, "Parseval " + spec.describe() + " n=" + std::to_string(n));
      }
    }

    // L1 sign changes.
    int fewest_extra = 1 << 20;
    for (const FunctionSpec& spec : {FunctionSpec(0.5, 0.0), FunctionSpec(1.0, 0.0), FunctionSpec(1.5, 0.0),
                                     FunctionSpec(0.5, 1.0, Variant::cos_part)}) {
      for (int n = 1; n <= 8; ++n) {
        const ApproxResult r = best_l1(ApproxProblem::for_spec(spec, n, PNorm(1.0)));
        const int changes = static_cast<int>(r.diagnostics.sign_changes.size());
        fewest_extra = std::min(fewest_extra, changes - (n + 1));
        v.require(changes >= n + 1, "sign changes " + spec.describe() + " n=" + std::to_string(n));
      }
    }

    // Coefficient bound on further minimax outputs, complex ones included.
    for (const FunctionSpec& spec : {FunctionSpec(1.0, 0.0), FunctionSpec(0.3, 0.0), FunctionSpec(1.0, 1.0),
                                     FunctionSpec(0.0, 4.0, Variant::cos_part)}) {
      for (int n : {1, 3, 6, 12, 20}) check_coefficients(solve(ApproxProblem::for_spec(spec, n, PNorm::infinity())));
    }
    v.require(coefficient_failures == 0, "coefficient bound on minimax outputs");

    v.note("Parseval worst=" + fmt("%.1e", worst_parseval) + " sign-change margin>=" + std::to_string(fewest_extra) +
           " coefficient bound " + std::to_string(minimax_outputs - coefficient_failures) + "/" +
           std::to_string(minimax_outputs));
  });

  criterion(10, "subsequence phase algebra and dilation transfer", 0.0, [](Verdict& v) {
    const std::vector<int> ks{1, 2, 3, 4, 5};
    double worst = 0.0;
    for (double beta : {1.0, pi, 4.0}) {
      for (auto kind : {SubsequenceKind::cos_locked, SubsequenceKind::sin_locked}) {
        const SubsequencePlan plan = subsequence_degrees(beta, kind, ks);
        for (double r : phase_residuals(plan)) worst = std::max(worst, r);
        for (std::size_t i = 0; i < ks.size(); ++i) {
          v.require(plan.degrees[i] == static_cast<long long>(std::floor(plan.dilations[i])), "degrees are floors");
        }
      }
    }
    v.require(worst <= 1e-12, "phase residuals <= 1e-12");
    double worst_transfer = 0.0;
    for (int k : {1, 2}) {
      const TransferReport t = dilation_transfer_check(4.0, k, 16);
      worst_transfer = std::max(worst_transfer, t.discrepancy);
      v.require(t.discrepancy <= 1e-6, "transfer k=" + std::to_string(k));
    }
    v.note(fmt("max phase residual=%.1e", worst) + fmt(" max transfer discrepancy=%.1e", worst_transfer));
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
