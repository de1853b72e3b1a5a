#include "fresnet/jet.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace fresnet {
namespace {

void expect_coeffs(const Jet& j, std::vector<double> expected, double tol = 1e-15) {
  ASSERT_EQ(j.coeffs().size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(j.coeff(static_cast<int>(k)), expected[k], tol) << k;
}

TEST(Jet, VariableExpansions) {
  expect_coeffs(Jet::variable(0.0, 2), {0.0, 1.0, 0.0});
  expect_coeffs(Jet::variable(1.0, 0), {1.0});
  expect_coeffs(Jet::variable(-1.0, 3), {-1.0, 1.0, 0.0, 0.0});
}

TEST(Jet, Arithmetic) {
  const Jet one_plus_x(0.0, {1.0, 1.0});
  expect_coeffs(one_plus_x * one_plus_x, {1.0, 2.0});
  expect_coeffs(Jet(0.0, {1.0, 2.0, 1.0}) * Jet(0.0, {1.0, 0.0, 0.0}), {1.0, 2.0, 1.0});
  expect_coeffs(Jet(0.0, {0.0, 1.0, 0.0}) + Jet(0.0, {1.0, 0.0, 0.0}), {1.0, 1.0, 0.0});
  expect_coeffs(Jet(0.0, {3.0, 1.0}) - Jet(0.0, {1.0, 1.0}), {2.0, 0.0});
  expect_coeffs(2.5 * Jet(0.0, {1.0, -2.0}), {2.5, -5.0});
}

TEST(Jet, MismatchedOperandsAreRejected) {
  EXPECT_THROW(Jet(0.0, {1.0, 1.0}) + Jet(1.0, {1.0, 1.0}), DomainError);
  EXPECT_THROW(Jet(0.0, {1.0, 1.0}) * Jet(0.0, {1.0, 1.0, 0.0}), DomainError);
}

TEST(Jet, OrderCap) {
  EXPECT_NO_THROW(Jet::variable(0.0, Jet::kMaxOrder));
  EXPECT_THROW(Jet::variable(0.0, Jet::kMaxOrder + 1), UnsupportedOrderError);
  EXPECT_THROW(Jet(0.0, {}), DomainError);
}

TEST(Jet, ElementaryMaclaurin) {
  expect_coeffs(sin(Jet::variable(0.0, 3)), {0.0, 1.0, 0.0, -1.0 / 6.0});
  expect_coeffs(exp(Jet::variable(0.0, 2)), {1.0, 1.0, 0.5});
  expect_coeffs(cos(Jet::variable(0.0, 2)), {1.0, 0.0, -0.5});
}

TEST(Jet, PolynomialDerivativesAreExact) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-3.0, 3.0), base(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 8;
    std::vector<double> p(m + 1);
    for (double& c : p) c = coef(rng);
    const double a = base(rng);

    // Horner in jets
    const Jet x = Jet::variable(a, m);
    Jet acc = Jet::constant(a, p[m], m);
    for (int k = m - 1; k >= 0; --k) acc = acc * x + p[k];

    for (int d = 0; d <= m; ++d) {
      // symbolic d-th derivative of sum p_k x^k
      double exact = 0.0;
      for (int k = d; k <= m; ++k) {
        double falling = 1.0;
        for (int i = 0; i < d; ++i) falling *= (k - i);
        exact += p[k] * falling * std::pow(a, k - d);
      }
      EXPECT_NEAR(acc.derivative(d), exact, 1e-13 * std::max(1.0, std::abs(exact))) << trial << " " << d;
    }
  }
}

TEST(Jet, LeibnizRule) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % 10;
    std::vector<double> a(m + 1), b(m + 1);
    for (int k = 0; k <= m; ++k) {
      a[k] = u(rng);
      b[k] = u(rng);
    }
    const Jet ju(0.3, a), jv(0.3, b);
    const auto du = ju.derivatives(), dv = jv.derivatives(), dp = (ju * jv).derivatives();
    for (int k = 0; k <= m; ++k) {
      double expected = 0.0, scale = 0.0, binom = 1.0;
      for (int j = 0; j <= k; ++j) {
        expected += binom * du[j] * dv[k - j];
        scale += std::abs(binom * du[j] * dv[k - j]);
        binom = binom * (k - j) / (j + 1);
      }
      EXPECT_NEAR(dp[k], expected, 1e-12 * std::max(1.0, scale));
    }
  }
}

TEST(Jet, SinCompositionMatchesDerivatives) {
  for (double a : {-1.0, -0.37, 0.0, 0.5, 1.0}) {
    for (int m = 0; m <= 8; ++m) {
      const Jet s = sin(Jet::variable(a, m));
      double fact = 1.0;
      for (int k = 0; k <= m; ++k) {
        if (k >= 2) fact *= k;
        EXPECT_NEAR(s.coeff(k), std::sin(a + k * std::numbers::pi / 2) / fact, 1e-13);
      }
    }
  }
}

TEST(Jet, ExpOfLinearIsScaledExponential) {
  const Jet e = exp(2.0 * Jet::variable(0.5, 6));
  const auto d = e.derivatives();
  for (int k = 0; k <= 6; ++k) EXPECT_NEAR(d[k], std::pow(2.0, k) * std::exp(1.0), 1e-12 * std::pow(2.0, k) * 3.0);
}

}  // namespace
}  // namespace fresnet
