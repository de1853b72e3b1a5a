#include "fresnet/targets.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

namespace fresnet {
namespace {

constexpr double pi = std::numbers::pi;

TEST(Targets, LookupAndEvaluate) {
  EXPECT_DOUBLE_EQ(targets::lookup("pw_smooth").eval(-0.5), 0.5);
  EXPECT_DOUBLE_EQ(targets::lookup("hat").eval(0.0), 1.0);
  EXPECT_DOUBLE_EQ(targets::lookup("sgn").eval(0.0), 0.0);
  EXPECT_NEAR(targets::lookup("pw_smooth").eval(0.5), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(targets::lookup("sgn").eval(-0.3), -1.0);
  EXPECT_DOUBLE_EQ(targets::lookup("hat").eval(0.25), 0.75);
  EXPECT_NEAR(targets::lookup("smooth_nonper").eval(0.3), std::exp(-0.045) * std::cos(2.4) + 0.3, 1e-15);
}

TEST(Targets, UnknownNameListsRegistry) {
  try {
    targets::lookup("tophat");
    FAIL() << "expected LookupError";
  } catch (const LookupError& e) {
    EXPECT_NE(std::string(e.what()).find("pw_smooth"), std::string::npos);
  }
}

TEST(Targets, DomainIsClosedUnitInterval) {
  const auto t = targets::hat();
  EXPECT_NO_THROW(t.eval(-1.0));
  EXPECT_NO_THROW(t.eval(1.0));
  EXPECT_THROW(t.eval(1.0 + 1e-12), DomainError);
  EXPECT_THROW(t.eval(std::nan("")), DomainError);
}

TEST(Targets, OneSidedDerivativesClosedForm) {
  const auto pw = targets::pw_smooth();
  const auto right = pw.one_sided_derivs(0.0, Side::right, 2);
  EXPECT_NEAR(right[0], 2.0, 1e-15);
  EXPECT_NEAR(right[1], 0.0, 1e-15);
  EXPECT_NEAR(right[2], -pi * pi, 1e-13);

  const auto left = pw.one_sided_derivs(0.0, Side::left, 2);
  EXPECT_EQ(left, (std::vector<double>{1.0, 1.0, 0.0}));

  const auto hat_end = targets::hat().one_sided_derivs(1.0, Side::right, 1);
  EXPECT_NEAR(hat_end[0], 0.0, 1e-15);
  EXPECT_NEAR(hat_end[1], -1.0, 1e-15);
}

TEST(Targets, UnsupportedOrder) {
  const auto t = targets::pw_smooth();
  EXPECT_THROW(t.one_sided_derivs(0.0, Side::left, t.max_order() + 1), UnsupportedOrderError);
  const PiecewiseTarget low("low", [](const Jet& x) { return x; }, [](const Jet& x) { return x; }, 0.0, 2);
  try {
    low.one_sided_derivs(0.0, Side::left, 3);
    FAIL();
  } catch (const UnsupportedOrderError& e) {
    EXPECT_EQ(e.max_order, 2);
  }
}

TEST(Targets, HatJumpVector) {
  const auto hat = targets::hat();
  const auto l = hat.one_sided_derivs(0.0, Side::left, 5);
  const auto r = hat.one_sided_derivs(0.0, Side::right, 5);
  EXPECT_EQ(r[0] - l[0], 0.0);
  EXPECT_EQ(r[1] - l[1], -2.0);
  for (int s = 2; s <= 5; ++s) EXPECT_EQ(r[s] - l[s], 0.0);
}

TEST(Targets, SmoothTargetHasNoJump) {
  const auto t = targets::smooth_nonper();
  EXPECT_TRUE(t.single_piece());
  const auto l = t.one_sided_derivs(0.0, Side::left, 6);
  const auto r = t.one_sided_derivs(0.0, Side::right, 6);
  for (int s = 0; s <= 6; ++s) EXPECT_EQ(l[s], r[s]);
}

// Closed forms restated in long double for the finite-difference oracle.
oracle::Real piece_value(const std::string& name, Side side, oracle::Real x) {
  using std::cos, std::exp;
  if (name == "sgn") return side == Side::left ? -1.0L : 1.0L;
  if (name == "pw_smooth") return side == Side::left ? 1.0L + x : 1.0L + cos(std::numbers::pi_v<long double> * x);
  if (name == "hat") return side == Side::left ? 1.0L + x : 1.0L - x;
  return exp(-x * x / 2) * cos(8.0L * x) + x;  // smooth_nonper
}

TEST(Targets, DerivativesAgreeWithFiniteDifferenceOracle) {
  struct Probe {
    double point;
    Side side;
    int dir;  // direction of the one-sided stencil
  };
  const Probe probes[] = {{0.0, Side::left, -1}, {0.0, Side::right, +1}, {-1.0, Side::left, +1},
                          {1.0, Side::right, -1}, {-0.4, Side::left, -1}, {0.6, Side::right, +1}};
  for (const auto& name : targets::names()) {
    const auto t = targets::lookup(name);
    for (const auto& probe : probes) {
      const auto d = t.one_sided_derivs(probe.point, probe.side, 4);
      for (int s = 0; s <= 4; ++s) {
        const auto fd = oracle::one_sided_fd(
            [&](oracle::Real x) { return piece_value(name, probe.side, x); }, probe.point, probe.dir, s);
        EXPECT_NEAR(d[s], static_cast<double>(fd), 1e-5) << name << " at " << probe.point << " s=" << s;
      }
    }
  }
}

TEST(Targets, CustomTargetFromClosures) {
  const PiecewiseTarget step("step2", [](const Jet& x) { return Jet::constant(x.base(), 0.0, x.order()); },
                             [](const Jet& x) { return Jet::constant(x.base(), 2.0, x.order()) + 0.0 * x; }, 0.0);
  EXPECT_EQ(step.eval(0.5), 2.0);
  EXPECT_EQ(step.eval(-0.5), 0.0);
  EXPECT_FALSE(step.single_piece());
}

}  // namespace
}  // namespace fresnet
