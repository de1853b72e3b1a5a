#pragma once

// Target functions on [-1, 1] with a single breakpoint at x = 0.
//
// Each piece is a closure over jets, so the same expression serves pointwise
// evaluation (order-0 jet) and exact one-sided derivatives at any point of
// its closed sub-interval.

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "fresnet/errors.hpp"
#include "fresnet/jet.hpp"

namespace fresnet {

enum class Side { left, right };

inline const char* to_string(Side side) { return side == Side::left ? "left" : "right"; }

using JetPiece = std::function<Jet(const Jet&)>;

class PiecewiseTarget {
 public:
  PiecewiseTarget(std::string name, JetPiece left, JetPiece right, double value_at_breakpoint,
                  int max_order = Jet::kMaxOrder, bool single_piece = false)
      : name_(std::move(name)),
        left_(std::move(left)),
        right_(std::move(right)),
        value_at_breakpoint_(value_at_breakpoint),
        max_order_(max_order),
        single_piece_(single_piece) {
    if (max_order_ < 0 || max_order_ > Jet::kMaxOrder)
      throw UnsupportedOrderError("target max_order out of range", Jet::kMaxOrder);
  }

  /// A smooth target stored as one expression on all of [-1, 1].
  static PiecewiseTarget smooth(std::string name, const JetPiece& piece, int max_order = Jet::kMaxOrder) {
    const double at_zero = piece(Jet::variable(0.0, 0)).value();
    return PiecewiseTarget(std::move(name), piece, piece, at_zero, max_order, true);
  }

  const std::string& name() const noexcept { return name_; }
  double breakpoint() const noexcept { return 0.0; }
  double value_at_breakpoint() const noexcept { return value_at_breakpoint_; }
  int max_order() const noexcept { return max_order_; }
  bool single_piece() const noexcept { return single_piece_; }

  double operator()(double x) const { return eval(x); }

  double eval(double x) const {
    if (!(x >= -1.0 && x <= 1.0)) throw DomainError("target evaluated outside [-1, 1]");
    if (x == 0.0) return value_at_breakpoint_;
    return piece(x < 0.0 ? Side::left : Side::right)(Jet::variable(x, 0)).value();
  }

  /// Jet of the piece selected by `side`, expanded at `point`.
  Jet jet(double point, Side side, int m) const {
    check_order(m);
    if (!(point >= -1.0 && point <= 1.0)) throw DomainError("derivative point outside [-1, 1]");
    return piece(side)(Jet::variable(point, m));
  }

  /// [f(p^±), f'(p^±), ..., f^{(m)}(p^±)].
  std::vector<double> one_sided_derivs(double point, Side side, int m) const {
    return jet(point, side, m).derivatives();
  }

  const JetPiece& piece(Side side) const noexcept { return side == Side::left ? left_ : right_; }

 private:
  void check_order(int m) const {
    if (m < 0 || m > max_order_)
      throw UnsupportedOrderError("target '" + name_ + "' supports derivatives up to order " +
                                      std::to_string(max_order_) + ", requested " + std::to_string(m),
                                  max_order_);
  }

  std::string name_;
  JetPiece left_;
  JetPiece right_;
  double value_at_breakpoint_;
  int max_order_;
  bool single_piece_;
};

namespace targets {

inline PiecewiseTarget sgn() {
  auto constant = [](double c) {
    return [c](const Jet& x) { return Jet::constant(x.base(), c, x.order()); };
  };
  return PiecewiseTarget("sgn", constant(-1.0), constant(1.0), 0.0);
}

/// 1 + x on [-1, 0], 1 + cos(pi x) on (0, 1].
inline PiecewiseTarget pw_smooth() {
  return PiecewiseTarget(
      "pw_smooth", [](const Jet& x) { return 1.0 + x; },
      [](const Jet& x) { return 1.0 + cos(std::numbers::pi * x); }, 1.0);
}

/// 1 + x on [-1, 0], 1 - x on (0, 1].
inline PiecewiseTarget hat() {
  return PiecewiseTarget(
      "hat", [](const Jet& x) { return 1.0 + x; }, [](const Jet& x) { return 1.0 - x; }, 1.0);
}

/// exp(-x^2/2) cos(8x) + x.
inline PiecewiseTarget smooth_nonper() {
  return PiecewiseTarget::smooth("smooth_nonper", [](const Jet& x) {
    return exp(-0.5 * (x * x)) * cos(8.0 * x) + x;
  });
}

inline std::vector<std::string> names() { return {"sgn", "pw_smooth", "hat", "smooth_nonper"}; }

inline PiecewiseTarget lookup(std::string_view name) {
  if (name == "sgn") return sgn();
  if (name == "pw_smooth") return pw_smooth();
  if (name == "hat") return hat();
  if (name == "smooth_nonper") return smooth_nonper();
  std::string known;
  for (const auto& n : names()) known += (known.empty() ? "" : ", ") + n;
  throw LookupError("unknown target '" + std::string(name) + "' (registered: " + known + ")");
}

}  // namespace targets
}  // namespace fresnet
