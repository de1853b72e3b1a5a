#pragma once

// Width-one deep network approximating sgn on [-1, 1] by fixed-point
// iteration of phi(y) = y + sin(pi y) / pi, started from sin(pi x / 2).

#include <cmath>
#include <numbers>

#include "fresnet/errors.hpp"
#include "fresnet/network.hpp"

namespace fresnet {

inline double phi(double y) noexcept { return y + std::sin(std::numbers::pi * y) / std::numbers::pi; }

inline FourierResNet build_sign_net(int depth) {
  if (depth < 1) throw DomainError("sign network depth must be >= 1");
  constexpr double pi = std::numbers::pi;
  std::vector<Layer> layers;
  layers.reserve(depth);
  layers.push_back(Layer{Branch{{pi / 2}, {1.0}, {0.0}}, std::nullopt});
  for (int l = 2; l <= depth; ++l) layers.push_back(Layer{Branch{}, Branch{{pi}, {1.0 / pi}, {0.0}}});
  return FourierResNet(std::move(layers));
}

/// C_p 2^{-l/p} with C_p = (4/p)^{1/p}: bound on ||sgn - f_l||_{L^p(-1,1)}.
inline double sign_error_bound(int depth, double p) {
  if (!(p > 0.0)) throw DomainError("sign_error_bound needs p > 0");
  return std::pow(4.0 / p, 1.0 / p) * std::exp2(-static_cast<double>(depth) / p);
}

/// (1 - f_1(x))^{2^{l-1}} for x in (0, 1], the pointwise bound on 1 - f_l(x).
inline double sign_pointwise_bound(double x, int depth) {
  const double base = 1.0 - std::sin(std::numbers::pi * x / 2);
  return std::pow(base, std::exp2(depth - 1));
}

/// sum_{l=1..L} 4 / (pi (2l-1)) sin((2l-1) pi x), the classical sine series of sgn on [-1, 1].
inline Branch truncated_sign_series(int terms) {
  if (terms < 1) throw DomainError("truncated sign series needs at least one term");
  constexpr double pi = std::numbers::pi;
  Branch b;
  for (int l = 1; l <= terms; ++l) {
    const double n = 2.0 * l - 1.0;
    b.add(n * pi, 4.0 / (pi * n), 0.0);
  }
  return b;
}

}  // namespace fresnet
