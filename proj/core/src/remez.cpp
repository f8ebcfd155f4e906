#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bernlab/best_approx.hpp"
#include "bernlab/error.hpp"
#include "detail/reduced_problem.hpp"

namespace bernlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Sample {
  double t = 0.0;
  double r = 0.0;
};

struct Peak {
  double t = 0.0;
  double r = 0.0;
  double lo = 0.0;  // refinement bracket
  double hi = 0.0;
};

// Residual of a real target against a Chebyshev series on [-1, 1].
class Residual {
 public:
  Residual(const ComplexFunction& g, std::vector<double> coeffs) : g_(g), coeffs_(std::move(coeffs)) {}

  double operator()(double t) const {
    const double f = g_(t).real();
    if (!std::isfinite(f)) raise(ErrorKind::non_finite, "target is not finite inside the interval");
    return f - clenshaw<double>(coeffs_, t);
  }
  const std::vector<double>& coeffs() const { return coeffs_; }

 private:
  const ComplexFunction& g_;
  std::vector<double> coeffs_;
};

// One extremum per maximal run of constant sign, with the neighbouring samples
// as a bracket for refinement.
std::vector<Peak> run_peaks(const std::vector<Sample>& scan) {
  std::vector<Peak> peaks;
  std::size_t i = 0;
  while (i < scan.size()) {
    if (scan[i].r == 0.0) {
      ++i;
      continue;
    }
    const bool positive = scan[i].r > 0.0;
    std::size_t best = i;
    std::size_t j = i;
    while (j < scan.size() && (scan[j].r == 0.0 || (scan[j].r > 0.0) == positive)) {
      if (std::abs(scan[j].r) > std::abs(scan[best].r)) best = j;
      ++j;
    }
    Peak peak;
    peak.t = scan[best].t;
    peak.r = scan[best].r;
    peak.lo = scan[best > 0 ? best - 1 : best].t;
    peak.hi = scan[best + 1 < scan.size() ? best + 1 : best].t;
    peaks.push_back(peak);
    i = j;
  }
  return peaks;
}

// Drops peaks until `target` remain while keeping signs alternating.
void trim_peaks(std::vector<Peak>& peaks, std::size_t target) {
  while (peaks.size() > target) {
    const std::size_t excess = peaks.size() - target;
    std::size_t weakest = 0;
    for (std::size_t i = 1; i < peaks.size(); ++i) {
      if (std::abs(peaks[i].r) < std::abs(peaks[weakest].r)) weakest = i;
    }
    const std::size_t last = peaks.size() - 1;
    if (weakest == 0 || weakest == last) {
      peaks.erase(peaks.begin() + static_cast<std::ptrdiff_t>(weakest));
    } else if (excess >= 2) {
      const std::size_t partner =
          std::abs(peaks[weakest - 1].r) < std::abs(peaks[weakest + 1].r) ? weakest - 1 : weakest + 1;
      const std::size_t first = std::min(weakest, partner);
      peaks.erase(peaks.begin() + static_cast<std::ptrdiff_t>(first),
                  peaks.begin() + static_cast<std::ptrdiff_t>(first) + 2);
    } else {
      // Removing an interior peak would break alternation; drop the weaker end.
      const std::size_t end = std::abs(peaks.front().r) < std::abs(peaks.back().r) ? 0 : last;
      peaks.erase(peaks.begin() + static_cast<std::ptrdiff_t>(end));
    }
  }
}

void refine(Peak& peak, const Residual& residual, bool exclude_origin) {
  double lo = peak.lo;
  double hi = peak.hi;
  if (exclude_origin && lo < 0.0 && hi > 0.0) {
    if (peak.t > 0.0) {
      lo = peak.t;
    } else {
      hi = peak.t;
    }
  }
  if (!(hi > lo)) return;
  const double sign = peak.r > 0.0 ? 1.0 : -1.0;
  const Maximum best = golden_maximize([&](double t) { return sign * residual(t); }, lo, hi,
                                       std::max(1e-10 * (hi - lo), 4.0 * kEps * std::abs(peak.t)));
  if (best.value > sign * peak.r) {
    peak.t = best.x;
    peak.r = sign * best.value;
  }
}

// Index of the point in `nodes` nearest to x within [lo, hi].
std::size_t nearest_index(const std::vector<double>& nodes, double x, std::size_t lo, std::size_t hi) {
  auto it = std::lower_bound(nodes.begin() + static_cast<std::ptrdiff_t>(lo),
                             nodes.begin() + static_cast<std::ptrdiff_t>(hi) + 1, x);
  std::size_t idx = static_cast<std::size_t>(it - nodes.begin());
  if (idx > hi) idx = hi;
  if (idx > lo && std::abs(nodes[idx - 1] - x) <= std::abs(nodes[idx] - x)) --idx;
  return idx;
}

std::vector<double> initial_reference(const std::vector<double>& nodes, std::size_t count, bool even) {
  std::vector<double> ref;
  std::size_t previous = 0;
  const std::size_t n = nodes.size();
  const double intervals = static_cast<double>(count - 1);
  for (std::size_t j = 0; j < count; ++j) {
    const double s = -std::cos(std::numbers::pi * static_cast<double>(j) / intervals);
    const double t = even ? std::sqrt(0.5 * (1.0 + s)) : s;
    const std::size_t lo = j == 0 ? 0 : previous + 1;
    const std::size_t hi = n - count + j;
    previous = nearest_index(nodes, t, lo, hi);
    ref.push_back(nodes[previous]);
  }
  return ref;
}

std::vector<Sample> merged_scan(const std::vector<double>& nodes, const Eigen::VectorXd& node_residual,
                                const std::vector<double>& extra, const Residual& residual) {
  std::vector<Sample> scan;
  scan.reserve(nodes.size() + extra.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    scan.push_back({nodes[i], node_residual[static_cast<Eigen::Index>(i)]});
  }
  for (double t : extra) {
    if (!std::binary_search(nodes.begin(), nodes.end(), t)) scan.push_back({t, residual(t)});
  }
  std::sort(scan.begin(), scan.end(), [](const Sample& a, const Sample& b) { return a.t < b.t; });
  return scan;
}

// Alternating near-maximal extrema over the whole interval.
std::vector<AlternationPoint> alternation_set(std::vector<Peak> peaks, double error, double spread,
                                              bool even, const detail::ReducedProblem& rd) {
  const double keep = error * (1.0 - std::max(1e-8, 10.0 * spread));
  std::vector<Peak> mirrored;
  if (even) {
    for (auto it = peaks.rbegin(); it != peaks.rend(); ++it) {
      if (it->t > 0.0) mirrored.push_back({-it->t, it->r, 0.0, 0.0});
    }
  }
  mirrored.insert(mirrored.end(), peaks.begin(), peaks.end());
  std::vector<AlternationPoint> out;
  for (const Peak& p : mirrored) {
    if (std::abs(p.r) < keep) continue;
    const double x = rd.midpoint + rd.half_width * p.t;
    if (!out.empty() && (out.back().value > 0.0) == (p.r > 0.0)) {
      if (std::abs(p.r) > std::abs(out.back().value)) out.back() = {x, p.r};
      continue;
    }
    out.push_back({x, p.r});
  }
  return out;
}

}  // namespace

ApproxResult remez_linf(const ApproxProblem& problem) {
  if (!problem.pnorm.is_infinite()) raise(ErrorKind::domain, "remez_linf needs p = inf");
  if (!problem.real_valued) raise(ErrorKind::domain, "remez_linf needs a real-valued target");
  const detail::ReducedProblem rd = detail::reduce(problem);
  const std::vector<double>& nodes = rd.sup_nodes;
  const std::size_t m = rd.basis.size();
  if (nodes.size() < m + 1) raise(ErrorKind::grid, "grid has fewer points than the reference needs");

  const Eigen::VectorXd fvals = detail::sample(rd.g, nodes).real();
  const Eigen::MatrixXd design = detail::basis_matrix(nodes, rd.basis, rd.degree);
  const double fscale = std::max(fvals.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const bool continuum = !problem.discrete;
  const bool exclude = rd.grid.excludes_origin();

  std::vector<double> reference = initial_reference(nodes, m + 1, rd.even);
  Eigen::VectorXd best_c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
  double best_error = std::numeric_limits<double>::infinity();
  double spread = std::numeric_limits<double>::infinity();
  std::vector<Peak> best_peaks;
  bool converged = false;
  bool exact = false;
  int iterations = 0;

  for (int it = 1; it <= problem.limits.remez_iterations; ++it) {
    iterations = it;
    const auto m_idx = static_cast<Eigen::Index>(m);
    Eigen::MatrixXd system(m_idx + 1, m_idx + 1);
    system.leftCols(m_idx) = detail::basis_matrix(reference, rd.basis, rd.degree);
    Eigen::VectorXd rhs(m_idx + 1);
    for (Eigen::Index i = 0; i <= m_idx; ++i) {
      system(i, m_idx) = i % 2 == 0 ? 1.0 : -1.0;
      rhs[i] = rd.g(reference[static_cast<std::size_t>(i)]).real();
    }
    // References crowding the origin give near-identical rows; a rank-revealing
    // solve keeps the iterate finite there.
    const Eigen::VectorXd solution = system.completeOrthogonalDecomposition().solve(rhs);
    const Eigen::VectorXd c = solution.head(m_idx);
    if (!c.allFinite()) raise(ErrorKind::non_finite, "Remez reference system is singular");

    std::vector<double> full(rd.degree + 1, 0.0);
    for (std::size_t j = 0; j < m; ++j) full[rd.basis[j]] = c[static_cast<Eigen::Index>(j)];
    const Residual residual(rd.g, full);
    const Eigen::VectorXd node_residual = fvals - design * c;
    const double noise = 64.0 * kEps * std::max(fscale, c.cwiseAbs().sum()) * static_cast<double>(m + 1);

    const std::vector<Sample> scan = merged_scan(nodes, node_residual, reference, residual);
    double error = 0.0;
    for (const Sample& s : scan) error = std::max(error, std::abs(s.r));
    if (error <= noise) {
      best_c = c;
      best_error = error;
      best_peaks.clear();
      converged = exact = true;
      spread = 0.0;
      break;
    }

    std::vector<Peak> peaks = run_peaks(scan);
    if (peaks.size() < m + 1) break;  // degenerate reference; keep the best iterate
    trim_peaks(peaks, m + 1);
    if (continuum) {
      for (Peak& peak : peaks) refine(peak, residual, exclude);
    }
    double top = 0.0;
    double bottom = std::numeric_limits<double>::infinity();
    for (const Peak& peak : peaks) {
      top = std::max(top, std::abs(peak.r));
      bottom = std::min(bottom, std::abs(peak.r));
    }
    error = std::max(error, top);
    spread = (top - bottom) / top;
    if (error < best_error) {
      best_error = error;
      best_c = c;
      best_peaks = peaks;
    }
    std::vector<double> next;
    for (const Peak& peak : peaks) next.push_back(peak.t);
    const bool distinct = std::adjacent_find(next.begin(), next.end(),
                                             [](double a, double b) { return !(a < b); }) == next.end();
    if (spread <= problem.limits.remez_spread || top - bottom <= noise) {
      converged = error == best_error;
      break;
    }
    if (!distinct) break;
    reference = std::move(next);
  }

  std::vector<std::complex<double>> coeffs(m);
  for (std::size_t j = 0; j < m; ++j) coeffs[j] = best_c[static_cast<Eigen::Index>(j)];

  ApproxResult result;
  result.error = best_error * detail::norm_scale(problem);
  result.polynomial = detail::make_polynomial(rd, problem, coeffs);
  result.pnorm = problem.pnorm;
  result.interval = problem.interval;
  result.degree = problem.degree;
  result.discretized = problem.discrete;
  result.discretization_note =
      problem.discrete ? detail::grid_note(problem, rd.grid)
                       : "continuum uniform norm: extrema refined between grid points";
  result.diagnostics.method = problem.discrete ? "remez_discrete" : "remez";
  result.diagnostics.iterations = iterations;
  result.diagnostics.converged = converged;
  result.diagnostics.peak_spread = spread;
  if (!exact) {
    result.diagnostics.alternation = alternation_set(best_peaks, best_error, spread, rd.even, rd);
  }
  return result;
}

}  // namespace bernlab
