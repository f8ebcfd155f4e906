#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bernlab/functions.hpp"
#include "bernlab/numerics.hpp"
#include "bernlab/polynomial.hpp"

namespace bernlab {

enum class SymmetryHint { none, even };

std::string to_string(SymmetryHint hint);

struct SolverLimits {
  int remez_iterations = 50;
  int lawson_iterations = 500;
  int lp_iterations = 200;        // iteratively reweighted least squares
  int interior_point_iterations = 120;
  double remez_spread = 1e-10;    // relative peak spread at convergence
  double lawson_gap = 1e-9;       // relative gap between Lawson's bounds
  double lp_change = 1e-10;       // relative change of the error between IRLS steps
  int l1_directions = 16;         // polygon sides for complex L1 moduli
};

/// min over polynomials P of degree <= n of ||f - P||_{L_p(interval)}.
struct ApproxProblem {
  ComplexFunction target;
  std::optional<FunctionSpec> spec;
  Interval interval{-1.0, 1.0};
  int degree = 0;
  PNorm pnorm = PNorm::infinity();
  GridOptions grid;
  SymmetryHint symmetry = SymmetryHint::none;
  bool real_valued = false;
  // Uniform-norm solves stay on the grid's sup nodes (no peak refinement
  // between nodes). Set for targets that oscillate without limit at 0.
  bool discrete = false;
  SolverLimits limits;

  /// Problem for the family member `spec` on [-a, a]: grids exclude the
  /// origin when alpha <= 0, even members use the even hint, and log-oscillating
  /// members with alpha <= 0 are solved in discrete form.
  static ApproxProblem for_spec(const FunctionSpec& spec, int degree, PNorm pnorm,
                                double half_width = 1.0);
  static ApproxProblem for_function(ComplexFunction target, bool real_valued, int degree,
                                    PNorm pnorm, Interval interval = {});

  QuadratureGrid make_grid() const;
};

struct AlternationPoint {
  double x = 0.0;
  double value = 0.0;  // signed residual
};

struct Diagnostics {
  std::string method;
  int iterations = 0;
  bool converged = false;
  std::vector<AlternationPoint> alternation;  // real uniform-norm solves
  std::vector<double> sign_changes;           // real L1 solves
  double peak_spread = std::numeric_limits<double>::quiet_NaN();
  double lower_bound = std::numeric_limits<double>::quiet_NaN();  // Lawson's weighted-LS bound
  double pythagoras_error = std::numeric_limits<double>::quiet_NaN();
  double direct_error = std::numeric_limits<double>::quiet_NaN();
};

struct ApproxResult {
  double error = 0.0;
  Polynomial polynomial = Polynomial::zero(0);
  PNorm pnorm = PNorm::infinity();
  Interval interval;
  int degree = 0;
  Diagnostics diagnostics;
  bool discretized = false;
  std::string discretization_note;
};

/// Real uniform-norm minimax by multi-point Remez exchange.
ApproxResult remez_linf(const ApproxProblem& problem);
/// Discrete complex minimax on the grid by Lawson's reweighting.
ApproxResult minimax_complex(const ApproxProblem& problem);
/// Orthogonal projection in L2 (Legendre coefficients by quadrature).
ApproxResult project_l2(const ApproxProblem& problem);
/// Quadrature-weighted L1 minimisation as a linear program.
ApproxResult best_l1(const ApproxProblem& problem);
/// Iteratively reweighted least squares for 1 < p < infinity.
ApproxResult best_lp(const ApproxProblem& problem);

/// Dispatches to the solver matching the problem's exponent and target.
ApproxResult solve(const ApproxProblem& problem);

}  // namespace bernlab
