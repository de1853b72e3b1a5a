#pragma once

// Truncated Taylor expansions ("jets") in one variable.
//
// A jet of order m at base point a stores the normalized coefficients
// c_k = f^{(k)}(a) / k!, k = 0..m. Arithmetic and elementary functions act on
// the truncated series, so derivatives of closed-form compositions come out
// exact up to rounding, with no finite differencing.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "fresnet/errors.hpp"

namespace fresnet {

class Jet {
 public:
  static constexpr int kMaxOrder = 12;

  Jet(double base_point, std::vector<double> coeffs)
      : base_(base_point), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("jet needs at least one coefficient");
    check_order(order());
  }

  /// The identity x expanded at `a`: coefficients [a, 1, 0, ..., 0].
  static Jet variable(double a, int order) {
    check_order(order);
    std::vector<double> c(order + 1, 0.0);
    c[0] = a;
    if (order >= 1) c[1] = 1.0;
    return Jet(a, std::move(c));
  }

  static Jet constant(double a, double value, int order) {
    check_order(order);
    std::vector<double> c(order + 1, 0.0);
    c[0] = value;
    return Jet(a, std::move(c));
  }

  double base() const noexcept { return base_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(int k) const { return coeffs_.at(k); }
  double value() const noexcept { return coeffs_[0]; }

  /// k-th derivative at the base point, k! * c_k.
  double derivative(int k) const {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return fact * coeffs_.at(k);
  }

  /// [f(a), f'(a), ..., f^{(m)}(a)].
  std::vector<double> derivatives() const {
    std::vector<double> d(coeffs_.size());
    double fact = 1.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k >= 2) fact *= static_cast<double>(k);
      d[k] = fact * coeffs_[k];
    }
    return d;
  }

  Jet operator-() const {
    Jet r = *this;
    for (double& c : r.coeffs_) c = -c;
    return r;
  }

  Jet& operator+=(const Jet& v) {
    check_compatible(v);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += v.coeffs_[k];
    return *this;
  }
  Jet& operator-=(const Jet& v) {
    check_compatible(v);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= v.coeffs_[k];
    return *this;
  }
  Jet& operator*=(const Jet& v) {
    check_compatible(v);
    std::vector<double> out(coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < out.size(); ++k)
      for (std::size_t j = 0; j <= k; ++j) out[k] += coeffs_[j] * v.coeffs_[k - j];
    coeffs_ = std::move(out);
    return *this;
  }

  Jet& operator+=(double s) {
    coeffs_[0] += s;
    return *this;
  }
  Jet& operator-=(double s) {
    coeffs_[0] -= s;
    return *this;
  }
  Jet& operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
  }

  friend Jet operator+(Jet u, const Jet& v) { return u += v; }
  friend Jet operator-(Jet u, const Jet& v) { return u -= v; }
  friend Jet operator*(Jet u, const Jet& v) { return u *= v; }
  friend Jet operator+(Jet u, double s) { return u += s; }
  friend Jet operator+(double s, Jet u) { return u += s; }
  friend Jet operator-(Jet u, double s) { return u -= s; }
  friend Jet operator-(double s, const Jet& u) { return (-u) += s; }
  friend Jet operator*(Jet u, double s) { return u *= s; }
  friend Jet operator*(double s, Jet u) { return u *= s; }

  // (sin u)' = u' cos u and (cos u)' = -u' sin u, matched order by order:
  //   k s_k = sum_{j=1..k} j u_j c_{k-j},  k c_k = -sum_{j=1..k} j u_j s_{k-j}.
  friend Jet sin(const Jet& u) { return sincos(u).first; }
  friend Jet cos(const Jet& u) { return sincos(u).second; }

  friend std::pair<Jet, Jet> sincos(const Jet& u) {
    const std::size_t n = u.coeffs_.size();
    std::vector<double> s(n, 0.0), c(n, 0.0);
    s[0] = std::sin(u.coeffs_[0]);
    c[0] = std::cos(u.coeffs_[0]);
    for (std::size_t k = 1; k < n; ++k) {
      double ss = 0.0, cc = 0.0;
      for (std::size_t j = 1; j <= k; ++j) {
        const double ju = static_cast<double>(j) * u.coeffs_[j];
        ss += ju * c[k - j];
        cc -= ju * s[k - j];
      }
      s[k] = ss / static_cast<double>(k);
      c[k] = cc / static_cast<double>(k);
    }
    return {Jet(u.base_, std::move(s)), Jet(u.base_, std::move(c))};
  }

  friend Jet exp(const Jet& u) {
    const std::size_t n = u.coeffs_.size();
    std::vector<double> e(n, 0.0);
    e[0] = std::exp(u.coeffs_[0]);
    for (std::size_t k = 1; k < n; ++k) {
      double acc = 0.0;
      for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * u.coeffs_[j] * e[k - j];
      e[k] = acc / static_cast<double>(k);
    }
    return Jet(u.base_, std::move(e));
  }

 private:
  static void check_order(int order) {
    if (order < 0 || order > kMaxOrder)
      throw UnsupportedOrderError(
          "jet order " + std::to_string(order) + " outside [0, " + std::to_string(kMaxOrder) + "]",
          kMaxOrder);
  }

  void check_compatible(const Jet& v) const {
    if (v.base_ != base_ || v.coeffs_.size() != coeffs_.size())
      throw DomainError("jet operands differ in base point or order");
  }

  double base_;
  std::vector<double> coeffs_;
};

}  // namespace fresnet
