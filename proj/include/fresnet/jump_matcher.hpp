#pragma once

// Jump matching at x = 0.
//
// With z(x) = sgn(x) + sin(x), find H such that q(x) = z(x) + H(z(x)) has
// prescribed one-sided derivatives alpha_s = q^{(s)}(0^-), beta_s = q^{(s)}(0^+).
// By Faa di Bruno,
//
//   d^s/dx^s H(z(x)) = sum_{j=1..s} B_{s,j}(z', z'', ...) H^{(j)}(z(x)),
//
// so the endpoint data of H at z(0^-) = -1 and z(0^+) = 1 follow from a
// lower-triangular solve with the partial Bell polynomials B_{s,j}.

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "fresnet/errors.hpp"
#include "fresnet/targets.hpp"
#include "fresnet/trig_hermite.hpp"

namespace fresnet {

struct ZProfile {
  double value = 0.0;
  std::vector<double> derivs;  ///< z', z'', ..., z^{(m)}

  int order() const noexcept { return static_cast<int>(derivs.size()); }
};

/// z = sgn + sin near `point`; at 0 the side picks the sign of sgn.
inline ZProfile z_profile(double point, Side side, int m) {
  if (!(point >= -1.0 && point <= 1.0)) throw DomainError("z_profile point outside [-1, 1]");
  if (m < 0) throw DomainError("z_profile order must be >= 0");
  double sign = point > 0.0 ? 1.0 : -1.0;
  if (point == 0.0) sign = side == Side::left ? -1.0 : 1.0;
  ZProfile zp{sign + std::sin(point), std::vector<double>(m)};
  for (int k = 1; k <= m; ++k) zp.derivs[k - 1] = std::sin(point + k * std::numbers::pi / 2);
  return zp;
}

/// Lower-triangular (m+1)x(m+1) matrix A with A(s, j) = B_{s,j}(z', z'', ...).
class ChainRuleMatrix {
 public:
  explicit ChainRuleMatrix(int m) : m_(m), a_((m + 1) * (m + 1), 0.0) {}

  int order() const noexcept { return m_; }
  double operator()(int s, int j) const { return a_.at(s * (m_ + 1) + j); }
  double& operator()(int s, int j) { return a_.at(s * (m_ + 1) + j); }

  /// Solves A v = rhs by forward substitution.
  std::vector<double> forward_substitute(std::span<const double> rhs) const {
    if (rhs.size() != static_cast<std::size_t>(m_ + 1)) throw DomainError("right-hand side has wrong length");
    std::vector<double> v(m_ + 1);
    for (int s = 0; s <= m_; ++s) {
      double acc = rhs[s];
      for (int j = 0; j < s; ++j) acc -= (*this)(s, j) * v[j];
      const double d = (*this)(s, s);
      if (d == 0.0) throw SolverError("chain-rule matrix has a zero diagonal", HUGE_VAL);
      v[s] = acc / d;
    }
    return v;
  }

 private:
  int m_;
  std::vector<double> a_;
};

/// B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}, B_{0,0} = 1.
inline ChainRuleMatrix chain_rule_matrix(const ZProfile& zp) {
  const int m = zp.order();
  ChainRuleMatrix a(m);
  a(0, 0) = 1.0;
  std::vector<std::vector<double>> binom(m + 1, std::vector<double>(m + 1, 0.0));
  for (int n = 0; n <= m; ++n) {
    binom[n][0] = 1.0;
    for (int k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0.0);
  }
  for (int n = 1; n <= m; ++n)
    for (int k = 1; k <= n; ++k) {
      double acc = 0.0;
      for (int i = 1; i <= n - k + 1; ++i) acc += binom[n - 1][i - 1] * zp.derivs[i - 1] * a(n - i, k - 1);
      a(n, k) = acc;
    }
  return a;
}

/// Values [z, z', ..., z^{(m)}] from a profile.
inline std::vector<double> z_values(const ZProfile& zp) {
  std::vector<double> v{zp.value};
  v.insert(v.end(), zp.derivs.begin(), zp.derivs.end());
  return v;
}

/// Endpoint data H^{(s)}(z(0^side)) that makes q reproduce `target` at 0^side.
inline std::vector<double> jump_endpoint_data(std::span<const double> target, Side side) {
  const int m = static_cast<int>(target.size()) - 1;
  const ZProfile zp = z_profile(0.0, side, m);
  const auto z = z_values(zp);
  std::vector<double> rhs(target.size());
  for (std::size_t s = 0; s < target.size(); ++s) rhs[s] = target[s] - z[s];
  return chain_rule_matrix(zp).forward_substitute(rhs);
}

inline TrigPoly build_jump_H(std::span<const double> alphas, std::span<const double> betas) {
  if (alphas.size() != betas.size() || alphas.empty())
    throw DomainError("build_jump_H needs equal-length, non-empty jump data");
  const auto minus = jump_endpoint_data(alphas, Side::left);
  const auto plus = jump_endpoint_data(betas, Side::right);
  return hermite_endpoint(std::span<const double>(minus), std::span<const double>(plus));
}

/// Derivatives 0..m of q = z + H(z) at point^side.
inline std::vector<double> q_derivs_at(double point, Side side, const TrigPoly& poly, int m) {
  const ZProfile zp = z_profile(point, side, m);
  const ChainRuleMatrix a = chain_rule_matrix(zp);
  std::vector<double> hd(m + 1);
  for (int j = 0; j <= m; ++j) hd[j] = poly.deriv_complex(zp.value, j).real();
  std::vector<double> out(m + 1);
  out[0] = zp.value + hd[0];
  for (int s = 1; s <= m; ++s) {
    double acc = zp.derivs[s - 1];
    for (int j = 1; j <= s; ++j) acc += a(s, j) * hd[j];
    out[s] = acc;
  }
  return out;
}

}  // namespace fresnet
