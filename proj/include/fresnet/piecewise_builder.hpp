#pragma once

// Deep network for a target with one jump at 0:
//
//   F(x) = Z_L(x) + H(Z_L(x)) + R_W(x),   Z_L = S_L + sin(x),
//
// where S_L is the depth-L sign network, H matches the jump data of f at 0
// through q = z + H(z), z = sgn + sin, and R_W is the shallow approximation
// of the globally C^m residual r = f - q.
//
// Layers 1..L carry S_L, with the sin(x) neuron on layer L's g-branch so the
// h-branch of layer L still sees S_{L-1}. Layer L+1 holds R_W on its
// g-branch and H on its h-branch, fed by f_L = Z_L.

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "fresnet/errors.hpp"
#include "fresnet/jump_matcher.hpp"
#include "fresnet/network.hpp"
#include "fresnet/quadrature.hpp"
#include "fresnet/sign.hpp"
#include "fresnet/smooth_approx.hpp"
#include "fresnet/targets.hpp"

namespace fresnet {

struct BuildSpec {
  PiecewiseTarget target;
  int m = 1;           ///< smoothness order, >= 1
  int half_modes = 0;  ///< K; the residual series has 2K+1 integer modes, W = 2K
  int depth = 2;       ///< L, >= 2
  QuadratureConfig quad{};

  int width() const noexcept { return 2 * half_modes; }
};

/// Stages of the construction, each evaluable on its own.
class PiecewiseConstruction {
 public:
  explicit PiecewiseConstruction(const BuildSpec& spec)
      : spec_(spec), sign_net_(build_sign_net(check(spec).depth)), jump_poly_(spec.m), residual_(fit(spec)) {
    network_ = assemble();
  }

  const BuildSpec& spec() const noexcept { return spec_; }
  bool shallow() const noexcept { return spec_.target.single_piece(); }
  const FourierResNet& network() const noexcept { return *network_; }
  const FourierResNet& sign_net() const noexcept { return sign_net_; }
  const TrigPoly& jump_poly() const noexcept { return jump_poly_; }
  const SmoothApproximation& residual_fit() const noexcept { return residual_; }

  double f(double x) const { return spec_.target.eval(x); }
  double sign_approx(double x) const { return sign_net_.eval(x); }                 // S_L
  double z_approx(double x) const { return sign_net_.eval(x) + std::sin(x); }     // Z_L
  double H(double y) const { return shallow() ? 0.0 : jump_poly_(y); }

  /// z = sgn + sin, with sgn(0) = 0.
  static double z(double x) {
    const double s = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    return s + std::sin(x);
  }

  double q(double x) const {
    if (shallow()) return 0.0;
    const double zx = z(x);
    return zx + jump_poly_(zx);
  }
  double r(double x) const { return f(x) - q(x); }
  double R(double x) const { return residual_(x); }

  /// Z_L + H(Z_L) + R_W summed stage by stage, independent of the network evaluator.
  double composed(double x) const {
    if (shallow()) return residual_(x);
    const double zl = z_approx(x);
    return zl + jump_poly_(zl) + residual_(x);
  }

 private:
  static const BuildSpec& check(const BuildSpec& spec) {
    if (spec.m < 1) throw DomainError("smoothness order m must be >= 1");
    if (spec.depth < 2) throw DomainError("depth L must be >= 2");
    if (spec.half_modes < 0) throw DomainError("half_modes must be >= 0");
    if (spec.m > spec.target.max_order())
      throw UnsupportedOrderError("target '" + spec.target.name() + "' supports derivatives up to order " +
                                      std::to_string(spec.target.max_order()),
                                  spec.target.max_order());
    spec.quad.validate();
    return spec;
  }

  SmoothApproximation fit(const BuildSpec& spec) {
    const PiecewiseTarget& t = spec.target;
    const int m = spec.m;
    std::vector<double> minus = t.one_sided_derivs(-1.0, Side::left, m);
    std::vector<double> plus = t.one_sided_derivs(1.0, Side::right, m);
    if (!t.single_piece()) {
      const auto alphas = t.one_sided_derivs(0.0, Side::left, m);
      const auto betas = t.one_sided_derivs(0.0, Side::right, m);
      jump_poly_ = build_jump_H(alphas, betas);
      const auto qm = q_derivs_at(-1.0, Side::left, jump_poly_, m);
      const auto qp = q_derivs_at(1.0, Side::right, jump_poly_, m);
      for (int s = 0; s <= m; ++s) {
        minus[s] -= qm[s];
        plus[s] -= qp[s];
      }
    }
    return fit_smooth([this](double x) { return r(x); }, minus, plus, m, spec.half_modes, spec.quad);
  }

  FourierResNet assemble() const {
    if (shallow()) return FourierResNet({Layer{residual_.to_branch(), std::nullopt}});
    std::vector<Layer> layers(sign_net_.layers().begin(), sign_net_.layers().end());
    layers.back().g.add(1.0, 1.0, 0.0);
    layers.push_back(Layer{residual_.to_branch(), to_branch(jump_poly_)});
    return FourierResNet(std::move(layers));
  }

  BuildSpec spec_;
  FourierResNet sign_net_;
  TrigPoly jump_poly_;
  SmoothApproximation residual_;
  std::optional<FourierResNet> network_;
};

inline PiecewiseConstruction component_views(const BuildSpec& spec) { return PiecewiseConstruction(spec); }

inline FourierResNet build_piecewise_net(const BuildSpec& spec) { return PiecewiseConstruction(spec).network(); }

/// L + W + 1 + 4(m+1), the neuron count of the deep construction with W = 2K.
inline std::size_t expected_neuron_count(int m, int half_modes, int depth) {
  return static_cast<std::size_t>(depth + 2 * half_modes + 1 + 4 * (m + 1));
}

struct Architecture {
  int depth;
  int half_modes;
};

/// Smallest (L, K) with 2^{-L/2} <= eps and W^{-m+1/2} <= eps, W = 2K. Error
/// constants are target dependent and not included.
inline Architecture suggest_architecture(double eps, int m) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("accuracy must lie in (0, 1)");
  if (m < 1) throw DomainError("smoothness order m must be >= 1");
  const int depth = std::max(2, static_cast<int>(std::ceil(2.0 * std::log2(1.0 / eps))));
  const double width = std::pow(eps, -1.0 / (m - 0.5));
  return {depth, std::max(1, static_cast<int>(std::ceil(width / 2.0)))};
}

}  // namespace fresnet
