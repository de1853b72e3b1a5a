#pragma once

// Shallow approximation of a smooth, non-periodic function on [-1, 1].
//
// A two-point Hermite polynomial H_r absorbs the endpoint mismatch of f up to
// order m, so g = f - H_r extends periodically with m continuous derivatives;
// g is then replaced by its truncated Fourier series over k = -K..K. The
// result F = H_r + G_K is a single branch with 2(m+1) + 2K + 1 entries.

#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "fresnet/errors.hpp"
#include "fresnet/network.hpp"
#include "fresnet/quadrature.hpp"
#include "fresnet/trig_hermite.hpp"

namespace fresnet {

/// Coefficients of a truncated series sum_{k=-K..K} c_k e^{i k pi x}; slot k + K.
class FourierSeries {
 public:
  FourierSeries(int half_modes, std::vector<std::complex<double>> coeffs)
      : half_modes_(half_modes), coeffs_(std::move(coeffs)) {
    if (half_modes_ < 0 || coeffs_.size() != static_cast<std::size_t>(2 * half_modes_ + 1))
      throw DomainError("Fourier series needs 2K+1 coefficients");
  }

  int half_modes() const noexcept { return half_modes_; }
  std::span<const std::complex<double>> coeffs() const noexcept { return coeffs_; }
  std::complex<double> coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k + half_modes_)); }

  double operator()(double x) const {
    double acc = 0.0;
    for (int k = -half_modes_; k <= half_modes_; ++k) {
      const auto c = coeffs_[static_cast<std::size_t>(k + half_modes_)];
      const double t = k * std::numbers::pi * x;
      acc += c.real() * std::cos(t) - c.imag() * std::sin(t);
    }
    return acc;
  }

  /// One neuron per mode, k = -K..K; the k = 0 entry has frequency 0.
  Branch to_branch() const {
    Branch b;
    for (int k = -half_modes_; k <= half_modes_; ++k) b.add_complex(k * std::numbers::pi, coeff(k));
    return b;
  }

  double sum_squares() const noexcept {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return s;
  }

 private:
  int half_modes_;
  std::vector<std::complex<double>> coeffs_;
};

/// g_k = (1/2) int_{-1}^{1} g(x) e^{-i k pi x} dx for k = -K..K.
template <class F>
FourierSeries fourier_coeffs(const F& g, int half_modes, const QuadratureConfig& quad = {}) {
  if (half_modes < 0) throw DomainError("half_modes must be >= 0");
  const CompositeRule rule(quad);
  const auto& x = rule.nodes();
  const auto& w = rule.weights();
  std::vector<double> gw(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) gw[i] = 0.5 * w[i] * g(x[i]);

  std::vector<std::complex<double>> c(2 * half_modes + 1);
  for (int k = 0; k <= half_modes; ++k) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double t = k * std::numbers::pi * x[i];
      re += gw[i] * std::cos(t);
      im -= gw[i] * std::sin(t);
    }
    c[half_modes + k] = {re, im};
    c[half_modes - k] = {re, -im};  // g is real
  }
  return FourierSeries(half_modes, std::move(c));
}

struct SmoothApproximation {
  TrigPoly hermite;
  FourierSeries series;

  double operator()(double x) const { return hermite(x) + series(x); }

  Branch to_branch() const {
    Branch b = fresnet::to_branch(hermite);
    b.append(series.to_branch());
    return b;
  }
};

template <class F>
SmoothApproximation fit_smooth(const F& f, std::span<const double> endpoint_derivs_minus,
                               std::span<const double> endpoint_derivs_plus, int m, int half_modes,
                               const QuadratureConfig& quad = {}) {
  if (m < 0) throw DomainError("smoothness order must be >= 0");
  if (endpoint_derivs_minus.size() != static_cast<std::size_t>(m + 1) ||
      endpoint_derivs_plus.size() != static_cast<std::size_t>(m + 1))
    throw DomainError("endpoint derivative lists must have length m+1");
  TrigPoly h = hermite_endpoint(endpoint_derivs_minus, endpoint_derivs_plus);
  auto series = fourier_coeffs([&](double x) { return f(x) - h(x); }, half_modes, quad);
  return SmoothApproximation{std::move(h), std::move(series)};
}

template <class F>
Branch build_smooth_branch(const F& f, std::span<const double> endpoint_derivs_minus,
                           std::span<const double> endpoint_derivs_plus, int m, int half_modes,
                           const QuadratureConfig& quad = {}) {
  return fit_smooth(f, endpoint_derivs_minus, endpoint_derivs_plus, m, half_modes, quad).to_branch();
}

}  // namespace fresnet
