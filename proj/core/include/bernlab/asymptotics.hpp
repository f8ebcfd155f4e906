#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bernlab/best_approx.hpp"
#include "bernlab/constants.hpp"
#include "bernlab/error.hpp"
#include "bernlab/functions.hpp"

namespace bernlab {

// ---------------------------------------------------------------------------
// Scaled error tables
// ---------------------------------------------------------------------------

enum class ExtrapolationMethod { aitken, richardson_1overN };

std::string to_string(ExtrapolationMethod method);
ExtrapolationMethod parse_extrapolation(std::string_view text);

struct ConvergenceRow {
  int n = 0;
  double error = 0.0;
  double scaled = 0.0;  // n^(alpha + 1/p) * error
  bool converged = false;
  bool discretized = false;
};

struct LimitEstimate {
  double value = 0.0;
  ExtrapolationMethod method = ExtrapolationMethod::richardson_1overN;
  bool stable = true;
};

struct ConvergenceReport {
  FunctionSpec spec{1.0, 0.0};
  PNorm p = PNorm::infinity();
  std::vector<ConvergenceRow> rows;
  std::optional<LimitEstimate> limit;
  std::optional<BernsteinConstant> reference;
  std::optional<double> relative_gap;  // |limit - reference| / reference
  bool partial = false;                // a row failed; rows hold the ones before it
  std::optional<ErrorKind> failure_kind;
  std::string failure;
};

struct TableOptions {
  GridOptions grid;
  SolverLimits limits;
  ExtrapolationMethod method = ExtrapolationMethod::richardson_1overN;
  bool parallel = false;  // rows solved concurrently, assembled in degree order
};

/// The exponent alpha + 1/p used to scale E_n.
double scaling_exponent(const FunctionSpec& spec, const PNorm& p);

/// Closed-form limit of the scaled column when one is known.
std::optional<BernsteinConstant> reference_constant(const FunctionSpec& spec, const PNorm& p);

/// E_n(f, L_p[-1, 1]) for each degree, its scaled value, an extrapolated limit
/// (when there are at least three rows) and the closed-form reference.
ConvergenceReport scaled_error_table(const FunctionSpec& spec, const PNorm& p,
                                     std::span<const int> degrees, const TableOptions& options = {});

/// Limit of a sequence s_n: Richardson assumes s_n = L + c/n, Aitken applies
/// the delta-squared process. Needs at least three finite values. If the
/// successive estimates drift apart the result is flagged unstable and holds
/// the last estimate before the drift.
LimitEstimate extrapolate_limit(std::span<const int> ns, std::span<const double> scaled,
                                ExtrapolationMethod method);
LimitEstimate extrapolate_limit(const ConvergenceReport& report, ExtrapolationMethod method);

// ---------------------------------------------------------------------------
// Dilation-locked subsequences
// ---------------------------------------------------------------------------

enum class SubsequenceKind { cos_locked, sin_locked };

std::string to_string(SubsequenceKind kind);
SubsequenceKind parse_subsequence_kind(std::string_view text);

/// Dilations a_k with beta log a_k = pi k (cos_locked) or (2k + 1) pi / 2
/// (sin_locked), using |beta|, and degrees floor(a_k).
struct SubsequencePlan {
  double beta = 1.0;
  SubsequenceKind kind = SubsequenceKind::cos_locked;
  std::vector<int> ks;
  std::vector<long long> degrees;
  std::vector<double> dilations;
};

inline constexpr double kMaxDilation = 1e15;

SubsequencePlan subsequence_degrees(double beta, SubsequenceKind kind, std::span<const int> ks);

/// Distance of beta log a_k from its locked phase, modulo pi, per entry.
std::vector<double> phase_residuals(const SubsequencePlan& plan);

// ---------------------------------------------------------------------------
// Scaling identity and dilation transfer
// ---------------------------------------------------------------------------

struct ScalingReport {
  double eta = 1.0;
  double half_width = 1.0;
  double lhs = 0.0;  // E_n(f, L_p[-a, a])
  double rhs = 0.0;  // |eta|^(1/p) E_n(f(eta .), L_p[-a/|eta|, a/|eta|])
  double discrepancy = 0.0;  // relative
};

/// Both sides of E_n(f, [-a, a]) = |eta|^(1/p) E_n(f(eta .), [-a/|eta|, a/|eta|]),
/// each from its own solve; the right side evaluates f(eta x) literally.
ScalingReport scaling_identity_check(const FunctionSpec& spec, const PNorm& p, int degree, double eta,
                                     double half_width = 1.0, const GridOptions& grid = {});

struct TransferReport {
  double beta = 1.0;
  int k = 1;
  double dilation = 1.0;
  int degree = 0;
  double on_unit = 0.0;     // discrete E_n(f_{0,beta,c}, L_inf[-1, 1])
  double on_dilated = 0.0;  // discrete E_n(f_{0,beta,c}, L_inf[-1/a, 1/a])
  double discrepancy = 0.0; // relative
};

/// With a = exp(pi k / |beta|), f_{0,beta,c}(x / a) = (-1)^k f_{0,beta,c}(x), so
/// the discrete uniform errors on [-1, 1] and [-1/a, 1/a] coincide.
TransferReport dilation_transfer_check(double beta, int k, int degree, const GridOptions& grid = {});

// ---------------------------------------------------------------------------
// Explicit decay bound for band-limited functions
// ---------------------------------------------------------------------------

enum class DecayTestFunction { cosine, sinc_power, constant };

std::string to_string(DecayTestFunction fn);
DecayTestFunction parse_decay_function(std::string_view text);

struct DecayBoundParams {
  double sigma = 1.0;
  double tau = 0.5;
  double C = 0.0;
  double C7 = 0.0;  // 2 tau exp(C sqrt(1 - tau^2)) / sqrt(1 - tau^2)
  double C8 = 0.0;  // log(1 + sqrt(1 - tau^2)) - log tau - sqrt(1 - tau^2)

  static DecayBoundParams make(double sigma, double tau, double C);
};

struct DecayBoundRow {
  int n = 0;
  double half_width = 0.0;  // (n + C) tau / sigma
  double error = 0.0;
  double bound = 0.0;  // C7 exp(-C8 n) ||g||
  double margin = 0.0; // bound - error
  bool converged = false;
  bool pass = false;
};

struct DecayBoundReport {
  DecayTestFunction function = DecayTestFunction::cosine;
  DecayBoundParams params;
  double sup_norm = 1.0;
  std::vector<DecayBoundRow> rows;
  bool pass = false;
};

/// Uniform norm on the real line of the test function (all equal 1).
double decay_function_norm(DecayTestFunction fn);
double decay_function_value(DecayTestFunction fn, double sigma, double x);

/// For each n, E_n(g, L_inf[-a_n tau/sigma, a_n tau/sigma]) with a_n = n + C
/// against C7 exp(-C8 n) ||g||. A violated bound is reported, not thrown.
DecayBoundReport decay_bound_check(DecayTestFunction fn, double sigma, double tau, double C,
                                   std::span<const int> degrees);

}  // namespace bernlab
