#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bernlab {

struct Interval {
  double lo = -1.0;
  double hi = 1.0;

  double length() const noexcept { return hi - lo; }
  double half_width() const noexcept { return 0.5 * (hi - lo); }
  double midpoint() const noexcept { return 0.5 * (hi + lo); }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool operator==(const Interval&) const = default;
};

/// Symmetric interval [-a, a].
Interval symmetric_interval(double half_width);

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<std::complex<double>(double)>;

// ---------------------------------------------------------------------------
// Integrability exponent
// ---------------------------------------------------------------------------

/// The exponent p of an L_p (quasi)norm. Only p >= 1 (or p = infinity) is
/// representable; smaller exponents raise UnsupportedExponent.
class PNorm {
 public:
  explicit PNorm(double p);
  static PNorm infinity();

  double p() const noexcept { return p_; }
  /// min{1, p}: the exponent for which ||f+g||^pt <= ||f||^pt + ||g||^pt.
  double p_tilde() const noexcept;
  bool is_infinite() const noexcept;
  /// 1/p, and 0 for p = infinity.
  double inverse() const noexcept;
  /// "1", "2", "inf", or the shortest decimal form of p.
  std::string label() const;

  bool operator==(const PNorm&) const = default;

 private:
  double p_;
};

/// Accepts "inf"/"infinity" or a decimal number.
PNorm parse_pnorm(std::string_view text);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

struct GaussRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;
};

GaussRule gauss_legendre(int count);

/// Chebyshev-Lobatto points cos(j pi / intervals), j = 0..intervals, ascending.
/// Doubling `intervals` yields a superset of points.
std::vector<double> chebyshev_lobatto(int intervals);

struct GridOptions {
  double ratio = 0.25;            // geometric ratio of panel edges toward 0
  double origin_floor = 1e-14;    // innermost edge, relative to max(|lo|, |hi|)
  int nodes_per_panel = 40;
  double max_panel_width = 0.125; // relative to max(|lo|, |hi|)
  bool exclude_origin = false;    // the integrand has no value at 0
};

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  // A panel touching the origin inside the floor. Quadrature on it uses the
  // substitution x = edge * u^8 so that |x|^gamma, gamma > -1, is smooth in u.
  bool at_origin = false;
};

/// Panels graded geometrically toward the origin, with Gauss-Legendre nodes
/// for quadrature and nested Chebyshev-Lobatto points for discrete suprema.
class QuadratureGrid {
 public:
  static QuadratureGrid graded(Interval interval, const GridOptions& options = {});

  /// Validates that the panels tile the interval exactly (GridError otherwise).
  QuadratureGrid(Interval interval, std::vector<Panel> panels, int nodes_per_panel,
                 double origin_floor, bool exclude_origin);

  const Interval& interval() const noexcept { return interval_; }
  const std::vector<Panel>& panels() const noexcept { return panels_; }
  int nodes_per_panel() const noexcept { return nodes_per_panel_; }
  double origin_floor() const noexcept { return origin_floor_; }
  bool excludes_origin() const noexcept { return exclude_origin_; }

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  /// Ascending, deduplicated points for discrete suprema. Panels inside the
  /// origin floor contribute nothing when the origin is excluded.
  std::span<const double> sup_nodes() const noexcept { return sup_nodes_; }

 private:
  void build();

  Interval interval_;
  std::vector<Panel> panels_;
  int nodes_per_panel_;
  double origin_floor_;
  bool exclude_origin_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> sup_nodes_;
};

/// (integral |f|^p)^(1/p) on the grid's quadrature nodes, or max |f| over the
/// grid's sup nodes when p = infinity.
double lp_quasinorm(const ComplexFunction& f, Interval interval, const PNorm& pnorm,
                    const QuadratureGrid& grid);

// ---------------------------------------------------------------------------
// Special functions and roots
// ---------------------------------------------------------------------------

/// Gamma function for complex argument (Lanczos approximation with reflection).
std::complex<double> complex_gamma(std::complex<double> z);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);
/// cos(pi x) with exact zeros at the half-integers.
double cos_pi(double x);

/// Brent's bracketed zero finder. Returns x with |f(x)| <= tol inside a final
/// bracket no wider than tol (machine precision permitting).
double bracketed_root(const RealFunction& f, double lo, double hi, double tol);

struct Maximum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
Maximum golden_maximize(const RealFunction& f, double lo, double hi, double x_tol);

}  // namespace bernlab
