#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <span>
#include <vector>

#include "fresnet/errors.hpp"
#include "fresnet/quadrature.hpp"

namespace fresnet {

template <class F>
concept RealFunction = std::regular_invocable<const F&, double> &&
                       std::convertible_to<std::invoke_result_t<const F&, double>, double>;

/// (int_{-1}^{1} |f - g|^p dx)^{1/p}.
template <RealFunction F, RealFunction G>
double lp_error(const F& f, const G& g, double p, const QuadratureConfig& quad = {}) {
  if (!(p > 0.0)) throw DomainError("lp_error needs p > 0");
  const CompositeRule rule(quad);
  const double integral = rule.integrate([&](double x) { return std::pow(std::abs(f(x) - g(x)), p); });
  return std::pow(integral, 1.0 / p);
}

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

/// Least-squares line through (log x, log err).
inline RateFit fit_rate(std::span<const double> xs, std::span<const double> errs) {
  if (xs.size() != errs.size()) throw DomainError("fit_rate needs equal-length inputs");
  if (xs.size() < 2) throw DomainError("fit_rate needs at least two points");
  const std::size_t n = xs.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(errs[i] > 0.0)) throw DomainError("fit_rate needs positive inputs");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(errs[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw DomainError("fit_rate needs at least two distinct abscissae");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  fit.points_used = n;
  return fit;
}

inline constexpr int kDefaultGridPoints = 20001;

/// Uniform grid of n points on [-1, 1] with x = 0 removed.
inline std::vector<double> diagnostic_grid(int n = kDefaultGridPoints) {
  if (n < 2) throw DomainError("grid needs at least two points");
  std::vector<double> xs;
  xs.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = -1.0 + 2.0 * i / (n - 1);
    if (x != 0.0) xs.push_back(x);
  }
  return xs;
}

/// Largest |x| on the grid where |f - approx| exceeds the threshold; 0 if nowhere.
template <RealFunction F, RealFunction A>
double gibbs_support_width(const F& f, const A& approx, double threshold, int grid_n = kDefaultGridPoints) {
  if (!(threshold > 0.0)) throw DomainError("threshold must be > 0");
  double width = 0.0;
  for (double x : diagnostic_grid(grid_n))
    if (std::abs(f(x) - approx(x)) > threshold) width = std::max(width, std::abs(x));
  return width;
}

/// max(0, max approx - hi, lo - min approx) over the grid.
template <RealFunction A>
double max_overshoot(const A& approx, double lo, double hi, int grid_n = kDefaultGridPoints) {
  if (!(lo < hi)) throw DomainError("max_overshoot needs lo < hi");
  double excess = 0.0;
  for (double x : diagnostic_grid(grid_n)) {
    const double v = approx(x);
    excess = std::max({excess, v - hi, lo - v});
  }
  return excess;
}

}  // namespace fresnet
