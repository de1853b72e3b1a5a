#pragma once

// Composite Gauss-Legendre quadrature on [-1, 1] with panels split at 0.
//
// Each half-interval is cut into `panels_per_side` equal panels; the panel
// touching 0 is then refined geometrically (widths shrinking by
// `grading_ratio`) until the innermost panel is narrower than
// kMinPanelWidth. Deep sign approximations concentrate their error in
// neighborhoods of 0 of width ~2^{-L}, which uniform panels cannot see.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "fresnet/errors.hpp"

namespace fresnet {

struct QuadratureConfig {
  int panels_per_side = 64;
  int nodes_per_panel = 12;
  double grading_ratio = 0.7;

  void validate() const {
    if (panels_per_side < 1) throw DomainError("panels_per_side must be >= 1");
    if (nodes_per_panel < 2 || nodes_per_panel > 64) throw DomainError("nodes_per_panel must lie in [2, 64]");
    if (!(grading_ratio > 0.0 && grading_ratio <= 1.0)) throw DomainError("grading_ratio must lie in (0, 1]");
  }
};

inline constexpr double kMinPanelWidth = 1e-12;

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], by Newton iteration on P_n.
inline GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  GaussLegendre rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

/// Panel edges on [0, 1], ascending, starting at 0 and ending at 1.
inline std::vector<double> half_panel_edges(const QuadratureConfig& cfg) {
  cfg.validate();
  const double h = 1.0 / cfg.panels_per_side;
  std::vector<double> edges{0.0};
  if (cfg.grading_ratio < 1.0) {
    std::vector<double> inner;
    for (double e = h * cfg.grading_ratio; e >= kMinPanelWidth; e *= cfg.grading_ratio) inner.push_back(e);
    edges.insert(edges.end(), inner.rbegin(), inner.rend());
  }
  for (int i = 1; i < cfg.panels_per_side; ++i) edges.push_back(i * h);
  edges.push_back(1.0);
  return edges;
}

class CompositeRule {
 public:
  explicit CompositeRule(const QuadratureConfig& cfg = {}) {
    const auto edges = half_panel_edges(cfg);
    const auto gl = gauss_legendre(cfg.nodes_per_panel);
    std::vector<double> hx, hw;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
      const double a = edges[p], b = edges[p + 1];
      const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        hx.push_back(mid + half * gl.nodes[i]);
        hw.push_back(half * gl.weights[i]);
      }
    }
    // [-1, 0] mirrors [0, 1]; nodes stored in ascending order.
    for (std::size_t i = hx.size(); i-- > 0;) {
      nodes_.push_back(-hx[i]);
      weights_.push_back(hw[i]);
    }
    nodes_.insert(nodes_.end(), hx.begin(), hx.end());
    weights_.insert(weights_.end(), hw.begin(), hw.end());
  }

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  template <class F>
  double integrate(const F& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(nodes_[i]);
    return acc;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace fresnet
