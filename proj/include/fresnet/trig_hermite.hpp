#pragma once

// Two-point trigonometric Hermite interpolation on [-1, 1].
//
//   H(x) = sum_{k=-(m+1)}^{m} c_{2k+1} exp(i (2k+1) pi x / 4)
//
// has 2(m+1) coefficients, fixed by H^{(s)}(-1) = alpha_s and
// H^{(s)}(1) = beta_s for s = 0..m.

#include <complex>
#include <iostream>
#include <numbers>
#include <span>
#include <vector>

#include "fresnet/errors.hpp"
#include "fresnet/lu.hpp"
#include "fresnet/network.hpp"

namespace fresnet {

class TrigPoly {
 public:
  static constexpr int kMaxOrder = 12;

  /// The zero polynomial of order m.
  explicit TrigPoly(int order_m) : TrigPoly(order_m, std::vector<std::complex<double>>(2 * (order_m + 1))) {}

  TrigPoly(int order_m, std::vector<std::complex<double>> coeffs, double condition = 1.0)
      : m_(order_m), coeffs_(std::move(coeffs)), condition_(condition) {
    if (m_ < 0 || m_ > kMaxOrder) throw UnsupportedOrderError("trigonometric polynomial order out of range", kMaxOrder);
    if (coeffs_.size() != static_cast<std::size_t>(2 * (m_ + 1)))
      throw DomainError("trigonometric polynomial of order m needs 2(m+1) coefficients");
  }

  int order() const noexcept { return m_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const std::complex<double>> coeffs() const noexcept { return coeffs_; }

  /// Mode index k in [-(m+1), m] for storage slot i.
  int mode(std::size_t i) const noexcept { return static_cast<int>(i) - (m_ + 1); }

  /// c_{2k+1} for k in [-(m+1), m].
  std::complex<double> coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k + m_ + 1)); }

  double frequency(std::size_t i) const noexcept { return (2.0 * mode(i) + 1.0) * std::numbers::pi / 4.0; }

  /// 1-norm condition number of the interpolation system (1 when not solved).
  double condition() const noexcept { return condition_; }

  double max_abs_coeff() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  /// Full complex value of the s-th derivative.
  std::complex<double> deriv_complex(double x, int s) const {
    std::complex<double> acc{};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const double w = frequency(i);
      acc += coeffs_[i] * ipow(std::complex<double>(0.0, w), s) * std::polar(1.0, w * x);
    }
    return acc;
  }

  double operator()(double x) const { return deriv_complex(x, 0).real(); }

 private:
  static std::complex<double> ipow(std::complex<double> z, int s) {
    std::complex<double> r{1.0, 0.0};
    for (int i = 0; i < s; ++i) r *= z;
    return r;
  }

  int m_;
  std::vector<std::complex<double>> coeffs_;
  double condition_;
};

/// Re H^{(s)}(x). Accepts any real x; H is entire.
inline double trig_deriv_eval(const TrigPoly& poly, double x, int s) {
  if (s < 0 || s > 2 * poly.order() + 4) throw DomainError("derivative order outside [0, 2m + 4]");
  return poly.deriv_complex(x, s).real();
}

inline constexpr double kHermiteConditionWarning = 1e10;

inline TrigPoly hermite_endpoint(std::span<const std::complex<double>> alphas,
                                 std::span<const std::complex<double>> betas) {
  if (alphas.size() != betas.size() || alphas.empty())
    throw DomainError("hermite_endpoint needs two equal-length, non-empty data lists");
  const int m = static_cast<int>(alphas.size()) - 1;
  if (m > TrigPoly::kMaxOrder) throw UnsupportedOrderError("hermite_endpoint order too high", TrigPoly::kMaxOrder);

  const TrigPoly shape(m);
  const std::size_t n = shape.size();
  DenseMatrix<std::complex<double>> a(n, n);
  std::vector<std::complex<double>> rhs(n);
  for (int s = 0; s <= m; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const double w = shape.frequency(i);
      std::complex<double> d{1.0, 0.0};
      for (int p = 0; p < s; ++p) d *= std::complex<double>(0.0, w);
      a(s, i) = d * std::polar(1.0, -w);
      a(m + 1 + s, i) = d * std::polar(1.0, w);
    }
    rhs[s] = alphas[s];
    rhs[m + 1 + s] = betas[s];
  }
  const LuDecomposition<std::complex<double>> lu(std::move(a));
  if (lu.condition() > kHermiteConditionWarning)
    std::clog << "warning: endpoint Hermite system of order " << m << " has condition number " << lu.condition()
              << '\n';
  return TrigPoly(m, lu.solve(rhs), lu.condition());
}

inline TrigPoly hermite_endpoint(std::span<const double> alphas, std::span<const double> betas) {
  std::vector<std::complex<double>> a(alphas.begin(), alphas.end());
  std::vector<std::complex<double>> b(betas.begin(), betas.end());
  return hermite_endpoint(std::span<const std::complex<double>>(a), std::span<const std::complex<double>>(b));
}

/// One real neuron per complex mode: Re(c e^{i w x}) -> (w, -Im c, Re c).
inline Branch to_branch(const TrigPoly& poly) {
  Branch b;
  for (std::size_t i = 0; i < poly.size(); ++i) b.add_complex(poly.frequency(i), poly.coeffs()[i]);
  return b;
}

}  // namespace fresnet
