#include "fresnet/piecewise_builder.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fresnet/metrics.hpp"
#include "oracles.hpp"

namespace fresnet {
namespace {

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

PiecewiseTarget zero_target() {
  auto zero = [](const Jet& x) { return Jet::constant(x.base(), 0.0, x.order()); };
  return PiecewiseTarget("zero", zero, zero, 0.0);
}

double lipschitz_H(const TrigPoly& h) {
  double lip = 0.0;
  for (int i = 0; i <= 4000; ++i) lip = std::max(lip, std::abs(h.deriv_complex(-1.01 + 2.02 * i / 4000.0, 1).real()));
  return lip;
}

TEST(PiecewiseBuilder, NeuronCountFormula) {
  EXPECT_EQ(build_piecewise_net({targets::pw_smooth(), 1, 3, 5}).neuron_count(), 20u);
  EXPECT_EQ(expected_neuron_count(1, 3, 5), 20u);
  for (int m : {1, 2, 4})
    for (int k : {0, 5, 16})
      for (int depth : {2, 7, 20})
        EXPECT_EQ(build_piecewise_net({targets::hat(), m, k, depth}).neuron_count(), expected_neuron_count(m, k, depth));
}

TEST(PiecewiseBuilder, LayerStructure) {
  const PiecewiseConstruction pc({targets::pw_smooth(), 2, 4, 6});
  const auto& net = pc.network();
  ASSERT_EQ(net.depth(), 7u);
  EXPECT_EQ(net.layer_widths(), (std::vector<std::size_t>{1, 1, 1, 1, 1, 2, 6 + 9 + 6}));
  EXPECT_EQ(net.layer(5).g.freqs.back(), 1.0);
  EXPECT_EQ(*net.layer(6).h, to_branch(pc.jump_poly()));
  EXPECT_FALSE(pc.shallow());
}

TEST(PiecewiseBuilder, WiringIdentity) {
  for (const auto& name : {"sgn", "pw_smooth", "hat", "smooth_nonper"}) {
    const PiecewiseConstruction pc({targets::lookup(name), 2, 8, 10});
    for (int i = 0; i <= 1000; ++i) {
      const double x = -1.0 + 2.0 * i / 1000.0;
      EXPECT_NEAR(pc.network().eval(x), pc.composed(x), 1e-12) << name << " " << x;
    }
  }
}

TEST(PiecewiseBuilder, ErrorSplitHolds) {
  for (const auto& name : {"sgn", "pw_smooth", "hat"})
    for (int m : {1, 3})
      for (int depth : {4, 12}) {
        const PiecewiseConstruction pc({targets::lookup(name), m, 8, depth});
        const double total = lp_error(pc.spec().target, pc.network(), 2.0);
        const double sign_err = lp_error(sgn, [&](double x) { return pc.sign_approx(x); }, 2.0);
        const double resid = lp_error([&](double x) { return pc.r(x); }, [&](double x) { return pc.R(x); }, 2.0);
        EXPECT_LE(total, sign_err * (1.0 + lipschitz_H(pc.jump_poly())) + resid) << name << m << depth;
      }
}

TEST(PiecewiseBuilder, ZMinusZLEqualsSignError) {
  const PiecewiseConstruction pc({targets::hat(), 2, 4, 9});
  const double a = lp_error([](double x) { return PiecewiseConstruction::z(x); }, [&](double x) { return pc.z_approx(x); }, 2.0);
  const double b = lp_error(sgn, [&](double x) { return pc.sign_approx(x); }, 2.0);
  EXPECT_NEAR(a, b, 1e-14);
}

TEST(PiecewiseBuilder, ResidualContinuousAtBreakpoint) {
  for (const auto& name : {"sgn", "pw_smooth", "hat"})
    for (int m = 1; m <= 4; ++m) {
      const PiecewiseConstruction pc({targets::lookup(name), m, 2, 3});
      const auto& t = pc.spec().target;
      const auto fl = t.one_sided_derivs(0.0, Side::left, m), fr = t.one_sided_derivs(0.0, Side::right, m);
      const auto ql = q_derivs_at(0.0, Side::left, pc.jump_poly(), m), qr = q_derivs_at(0.0, Side::right, pc.jump_poly(), m);
      for (int s = 0; s <= m; ++s) EXPECT_NEAR(fl[s] - ql[s], fr[s] - qr[s], 1e-9) << name << m << s;
      EXPECT_NEAR(pc.r(-1e-9), pc.r(1e-9), 1e-7);
    }
}

TEST(PiecewiseBuilder, QMatchesTargetAtBreakpointByJets) {
  const auto t = targets::pw_smooth();
  const PiecewiseConstruction pc({t, 2, 2, 3});
  for (Side side : {Side::left, Side::right}) {
    const Jet z = (side == Side::left ? -1.0 : 1.0) + sin(Jet::variable(0.0, 2));
    const auto q = (z + oracle::trig_poly_of_jet(pc.jump_poly(), z)).derivatives();
    const auto f = t.one_sided_derivs(0.0, side, 2);
    for (int s = 0; s <= 2; ++s) EXPECT_NEAR(q[s], f[s], 1e-8);
  }
}

TEST(PiecewiseBuilder, FrequenciesDoNotDependOnTarget) {
  for (int m : {1, 3})
    for (int k : {3, 10})
      for (int depth : {2, 9}) {
        auto a = build_piecewise_net({targets::pw_smooth(), m, k, depth}).frequencies();
        auto b = build_piecewise_net({targets::hat(), m, k, depth}).frequencies();
        auto c = build_piecewise_net({targets::sgn(), m, k, depth}).frequencies();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::sort(c.begin(), c.end());
        EXPECT_EQ(a, b);
        EXPECT_EQ(a, c);
      }
}

TEST(PiecewiseBuilder, AmplitudesStayBounded) {
  for (const auto& name : {"pw_smooth", "hat"}) {
    double lo = INFINITY, hi = 0.0;
    for (int k : {3, 8, 32, 64})
      for (int depth : {2, 10, 20}) {
        const double a = build_piecewise_net({targets::lookup(name), 2, k, depth}).max_abs_amplitude();
        lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
    EXPECT_LT((hi - lo) / hi, 0.1) << name;
  }
}

TEST(PiecewiseBuilder, ZeroTargetCancels) {
  const PiecewiseConstruction pc({zero_target(), 2, 16, 20});
  double worst = 0.0;
  for (double x : diagnostic_grid(4001)) worst = std::max(worst, std::abs(pc.network().eval(x)));
  EXPECT_LE(worst, 0.05);
}

TEST(PiecewiseBuilder, SignTargetConverges) {
  const PiecewiseConstruction pc({targets::sgn(), 1, 0, 12});
  const double err = lp_error(sgn, pc.network(), 2.0);
  const double sign_err = lp_error(sgn, [&](double x) { return pc.sign_approx(x); }, 2.0);
  const double resid = lp_error([&](double x) { return pc.r(x); }, [&](double x) { return pc.R(x); }, 2.0);
  EXPECT_LE(err, sign_err * (1.0 + lipschitz_H(pc.jump_poly())) + resid);
  EXPECT_NEAR(pc.network().eval(1.0), pc.composed(1.0), 1e-12);
}

TEST(PiecewiseBuilder, SmoothTargetBuildsShallowNetwork) {
  const PiecewiseConstruction pc({targets::smooth_nonper(), 2, 16, 5});
  EXPECT_TRUE(pc.shallow());
  EXPECT_EQ(pc.network().depth(), 1u);
  EXPECT_EQ(pc.H(0.3), 0.0);
  EXPECT_LT(lp_error(targets::smooth_nonper(), pc.network(), 2.0), 1e-3);
}

TEST(PiecewiseBuilder, Preconditions) {
  const PiecewiseTarget limited("limited", [](const Jet& x) { return x; }, [](const Jet& x) { return 2.0 * x; }, 0.0, 2);
  try {
    build_piecewise_net({limited, 3, 2, 4});
    FAIL();
  } catch (const UnsupportedOrderError& e) {
    EXPECT_EQ(e.max_order, 2);
  }
  EXPECT_THROW(build_piecewise_net({targets::hat(), 0, 2, 4}), DomainError);
  EXPECT_THROW(build_piecewise_net({targets::hat(), 1, 2, 1}), DomainError);
  EXPECT_THROW(build_piecewise_net({targets::hat(), 1, -1, 4}), DomainError);
}

TEST(PiecewiseBuilder, SuggestedArchitecture) {
  const auto arch = suggest_architecture(1e-3, 2);
  EXPECT_EQ(arch.depth, 20);
  EXPECT_GE(std::pow(2.0 * arch.half_modes, -1.5), 0.0);
  EXPECT_LE(std::pow(2.0 * arch.half_modes, -1.5), 1e-3);
  EXPECT_THROW(suggest_architecture(0.0, 2), DomainError);
}

}  // namespace
}  // namespace fresnet
