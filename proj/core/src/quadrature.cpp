#include <algorithm>
#include <cmath>
#include <numbers>

#include "bernlab/error.hpp"
#include "bernlab/numerics.hpp"

namespace bernlab {

namespace {

constexpr int kOriginPower = 8;

// Splits [a, b] into equal pieces no wider than max_width.
void append_split(std::vector<Panel>& out, double a, double b, double max_width) {
  const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / max_width - 1e-12)));
  const double step = (b - a) / pieces;
  double left = a;
  for (int j = 1; j <= pieces; ++j) {
    const double right = j == pieces ? b : a + j * step;
    out.push_back({left, right, false});
    left = right;
  }
}

// Panels on [0, length] graded toward 0, returned with positive coordinates.
std::vector<Panel> graded_side(double length, double floor, double ratio, double max_width) {
  std::vector<double> edges{length};
  while (edges.back() * ratio > floor) edges.push_back(edges.back() * ratio);
  if (edges.back() > floor) edges.push_back(floor);

  std::vector<Panel> panels;
  panels.push_back({0.0, edges.back(), true});
  for (auto it = edges.rbegin(); it + 1 != edges.rend(); ++it) {
    append_split(panels, *it, *(it + 1), max_width);
  }
  return panels;
}

}  // namespace

GaussRule gauss_legendre(int count) {
  if (count < 1) raise(ErrorKind::domain, "Gauss rule needs at least one node");
  GaussRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.nodes[i] = -x;
    rule.nodes[count - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[count - 1 - i] = w;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = 0.0;
  return rule;
}

std::vector<double> chebyshev_lobatto(int intervals) {
  if (intervals < 1) raise(ErrorKind::domain, "Chebyshev-Lobatto set needs at least one interval");
  std::vector<double> points(intervals + 1);
  for (int j = 0; 2 * j <= intervals; ++j) {
    const double x = std::cos(std::numbers::pi * j / intervals);
    points[j] = -x;
    points[intervals - j] = x;
  }
  points.front() = -1.0;
  points.back() = 1.0;
  if (intervals % 2 == 0) points[intervals / 2] = 0.0;
  return points;
}

QuadratureGrid QuadratureGrid::graded(Interval interval, const GridOptions& options) {
  if (!(interval.lo < interval.hi) || !std::isfinite(interval.lo) || !std::isfinite(interval.hi)) {
    raise(ErrorKind::grid, "grid interval must satisfy lo < hi");
  }
  if (!(options.ratio > 0.0 && options.ratio < 1.0)) {
    raise(ErrorKind::grid, "grading ratio must lie in (0, 1)");
  }
  if (!(options.origin_floor > 0.0 && options.origin_floor < 1.0)) {
    raise(ErrorKind::grid, "origin floor must lie in (0, 1)");
  }
  if (!(options.max_panel_width > 0.0)) {
    raise(ErrorKind::grid, "maximum panel width must be positive");
  }
  const double scale = std::max(std::abs(interval.lo), std::abs(interval.hi));
  const double floor = options.origin_floor * scale;
  const double max_width = options.max_panel_width * scale;

  std::vector<Panel> panels;
  if (interval.lo < 0.0 && interval.hi > 0.0 && -interval.lo <= floor) {
    raise(ErrorKind::grid, "interval is narrower than the origin floor");
  }
  if (interval.lo <= 0.0 && interval.hi >= 0.0) {
    if (interval.lo < 0.0) {
      auto left = graded_side(-interval.lo, floor, options.ratio, max_width);
      for (auto it = left.rbegin(); it != left.rend(); ++it) {
        panels.push_back({-it->hi, -it->lo, it->at_origin});
      }
      panels.back().hi = 0.0;
    }
    if (interval.hi > 0.0) {
      auto right = graded_side(interval.hi, floor, options.ratio, max_width);
      panels.insert(panels.end(), right.begin(), right.end());
    }
    panels.front().lo = interval.lo;
    panels.back().hi = interval.hi;
  } else {
    append_split(panels, interval.lo, interval.hi, max_width);
  }
  return QuadratureGrid(interval, std::move(panels), options.nodes_per_panel, floor,
                        options.exclude_origin);
}

QuadratureGrid::QuadratureGrid(Interval interval, std::vector<Panel> panels, int nodes_per_panel,
                               double origin_floor, bool exclude_origin)
    : interval_(interval),
      panels_(std::move(panels)),
      nodes_per_panel_(nodes_per_panel),
      origin_floor_(origin_floor),
      exclude_origin_(exclude_origin) {
  if (nodes_per_panel_ < 2) raise(ErrorKind::grid, "need at least two nodes per panel");
  if (panels_.empty()) raise(ErrorKind::grid, "grid has no panels");
  if (panels_.front().lo != interval_.lo || panels_.back().hi != interval_.hi) {
    raise(ErrorKind::grid, "grid does not tile the interval");
  }
  for (std::size_t i = 0; i < panels_.size(); ++i) {
    if (!(panels_[i].lo < panels_[i].hi)) raise(ErrorKind::grid, "degenerate panel");
    if (i > 0 && panels_[i].lo != panels_[i - 1].hi) {
      raise(ErrorKind::grid, "grid does not tile the interval");
    }
    if (panels_[i].at_origin && panels_[i].lo != 0.0 && panels_[i].hi != 0.0) {
      raise(ErrorKind::grid, "origin panel must end at 0");
    }
  }
  build();
}

void QuadratureGrid::build() {
  const GaussRule rule = gauss_legendre(nodes_per_panel_);
  const std::vector<double> lobatto = chebyshev_lobatto(nodes_per_panel_);
  nodes_.clear();
  weights_.clear();
  sup_nodes_.clear();
  for (const Panel& panel : panels_) {
    const double width = panel.hi - panel.lo;
    if (panel.at_origin) {
      const bool positive = panel.lo == 0.0;
      const double edge = positive ? panel.hi : panel.lo;
      const std::size_t first = nodes_.size();
      for (int i = 0; i < nodes_per_panel_; ++i) {
        const double u = 0.5 * (rule.nodes[i] + 1.0);
        const double x = edge * std::pow(u, kOriginPower);
        const double w = std::abs(edge) * kOriginPower * std::pow(u, kOriginPower - 1) * 0.5 *
                         rule.weights[i];
        nodes_.push_back(x);
        weights_.push_back(w);
      }
      if (!positive) {
        std::reverse(nodes_.begin() + first, nodes_.end());
        std::reverse(weights_.begin() + first, weights_.end());
      }
      if (exclude_origin_) continue;
    } else {
      const double mid = 0.5 * (panel.lo + panel.hi);
      for (int i = 0; i < nodes_per_panel_; ++i) {
        nodes_.push_back(mid + 0.5 * width * rule.nodes[i]);
        weights_.push_back(0.5 * width * rule.weights[i]);
      }
    }
    for (std::size_t j = 0; j < lobatto.size(); ++j) {
      double x;
      if (j == 0) {
        x = panel.lo;
      } else if (j + 1 == lobatto.size()) {
        x = panel.hi;
      } else {
        x = 0.5 * (panel.lo + panel.hi) + 0.5 * width * lobatto[j];
      }
      sup_nodes_.push_back(x);
    }
  }
  if (exclude_origin_) {
    std::erase(sup_nodes_, 0.0);
  }
  std::sort(sup_nodes_.begin(), sup_nodes_.end());
  sup_nodes_.erase(std::unique(sup_nodes_.begin(), sup_nodes_.end()), sup_nodes_.end());
}

double lp_quasinorm(const ComplexFunction& f, Interval interval, const PNorm& pnorm,
                    const QuadratureGrid& grid) {
  if (!(grid.interval() == interval)) {
    raise(ErrorKind::grid, "grid does not tile the interval");
  }
  if (pnorm.is_infinite()) {
    double sup = 0.0;
    for (double x : grid.sup_nodes()) {
      const double a = std::abs(f(x));
      if (!std::isfinite(a)) raise(ErrorKind::non_finite, "non-finite value in sup norm");
      sup = std::max(sup, a);
    }
    return sup;
  }
  const auto nodes = grid.nodes();
  const auto weights = grid.weights();
  std::vector<double> magnitudes(nodes.size());
  double largest = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    magnitudes[i] = std::abs(f(nodes[i]));
    if (!std::isfinite(magnitudes[i])) {
      raise(ErrorKind::non_finite, "non-finite value at quadrature node");
    }
    largest = std::max(largest, magnitudes[i]);
  }
  if (largest == 0.0) return 0.0;
  const double p = pnorm.p();
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    sum += weights[i] * std::pow(magnitudes[i] / largest, p);
  }
  return largest * std::pow(sum, 1.0 / p);
}

}  // namespace bernlab
