#pragma once

// Experiment drivers behind the command-line tool: each returns a CSV table
// (and optionally chart series) so results can be checked without a shell.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ios>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fresnet/errors.hpp"
#include "fresnet/metrics.hpp"
#include "fresnet/piecewise_builder.hpp"
#include "fresnet/serialize.hpp"
#include "fresnet/sign.hpp"
#include "fresnet/smooth_approx.hpp"
#include "fresnet/targets.hpp"

namespace fresnet {

/// A failed experiment-level check (e.g. an ordering that should hold).
class ExperimentFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

  void add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size()) throw DomainError("row width does not match header");
    rows_.push_back(std::move(cells));
  }

  std::size_t column_index(const std::string& name) const {
    const auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) throw LookupError("no column '" + name + "'");
    return static_cast<std::size_t>(it - columns_.begin());
  }

  /// Numeric view of a column; empty cells become NaN.
  std::vector<double> column(const std::string& name) const {
    const std::size_t c = column_index(name);
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row[c].empty() ? std::nan("") : std::stod(row[c]));
    return out;
  }

  std::string to_csv() const {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
      }
      out += '\n';
    };
    line(columns_);
    for (const auto& row : rows_) line(row);
    return out;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

inline std::string cell(double v) { return format_real(v); }
inline std::string cell(long long v) { return std::to_string(v); }
inline std::string cell(int v) { return std::to_string(v); }
inline std::string cell(std::size_t v) { return std::to_string(v); }
inline std::string cell(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

struct ChartSeries {
  std::string name;
  std::vector<double> xs;
  std::vector<double> ys;
};

/// Minimal 800x500 polyline chart; non-finite or (on log axes) nonpositive points are skipped.
inline std::string render_svg(const std::string& title, const std::vector<ChartSeries>& series, bool log_x = false,
                              bool log_y = false) {
  constexpr double width = 800.0, height = 500.0, margin = 60.0;
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};
  auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return log_y ? std::log10(v) : v; };
  auto usable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!log_x || x > 0.0) && (!log_y || y > 0.0);
  };
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!usable(s.xs[i], s.ys[i])) continue;
      x0 = std::min(x0, tx(s.xs[i]));
      x1 = std::max(x1, tx(s.xs[i]));
      y0 = std::min(y0, ty(s.ys[i]));
      y1 = std::max(y1, ty(s.ys[i]));
    }
  if (!(x0 < x1)) x0 = x0 - 1.0, x1 = x0 + 2.0;
  if (!(y0 < y1)) y0 = y0 - 1.0, y1 = y0 + 2.0;
  auto px = [&](double v) { return margin + (tx(v) - x0) / (x1 - x0) * (width - 2 * margin); };
  auto py = [&](double v) { return height - margin - (ty(v) - y0) / (y1 - y0) * (height - 2 * margin); };

  std::ostringstream svg;
  char buf[64];
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" width=\"800\" height=\"500\">\n"
      << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n"
      << "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" << title
      << "</text>\n"
      << "<rect x=\"60\" y=\"60\" width=\"680\" height=\"380\" fill=\"none\" stroke=\"black\"/>\n";
  auto axis_label = [&](double v, bool log) {
    std::snprintf(buf, sizeof buf, log ? "1e%.3g" : "%.3g", v);
    return std::string(buf);
  };
  svg << "<text x=\"60\" y=\"460\" font-family=\"sans-serif\" font-size=\"11\">" << axis_label(x0, log_x) << "</text>\n"
      << "<text x=\"740\" y=\"460\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << axis_label(x1, log_x) << "</text>\n"
      << "<text x=\"55\" y=\"440\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << axis_label(y0, log_y) << "</text>\n"
      << "<text x=\"55\" y=\"70\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << axis_label(y1, log_y) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = palette[k % std::size(palette)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!usable(s.xs[i], s.ys[i])) continue;
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(s.xs[i]), py(s.ys[i]));
      svg << buf;
    }
    svg << "\"/>\n<text x=\"" << 600 << "\" y=\"" << 80 + 16 * k << "\" fill=\"" << color
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.name << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

/// Chart series from table columns.
inline std::vector<ChartSeries> table_series(const Table& table, const std::string& x,
                                             const std::vector<std::string>& ys) {
  std::vector<ChartSeries> out;
  const auto xs = table.column(x);
  for (const auto& y : ys) out.push_back({y, xs, table.column(y)});
  return out;
}

/// n uniform points on [-1, 1], including 0 when n is odd.
inline std::vector<double> uniform_grid(int n) {
  if (n < 2) throw DomainError("grid needs at least two points");
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = -1.0 + 2.0 * i / (n - 1);
  if (n % 2 == 1) xs[n / 2] = 0.0;
  return xs;
}

inline double sign_fn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// sign-curves

inline Table sign_curves(const std::vector<int>& depths, int grid_n) {
  if (depths.empty()) throw DomainError("depth list must be non-empty");
  std::vector<std::string> columns{"x", "sgn"};
  std::vector<FourierResNet> nets;
  std::vector<Branch> series;
  for (int d : depths) {
    columns.push_back("resnet_L" + std::to_string(d));
    nets.push_back(build_sign_net(d));
  }
  for (int d : depths) {
    columns.push_back("series_L" + std::to_string(d));
    series.push_back(truncated_sign_series(d));
  }
  Table table(columns);
  for (double x : uniform_grid(grid_n)) {
    std::vector<std::string> row{cell(x), cell(sign_fn(x))};
    for (const auto& net : nets) row.push_back(cell(net.eval(x)));
    for (const auto& s : series) row.push_back(cell(s(x)));
    table.add_row(std::move(row));
  }
  return table;
}

// sign-convergence

struct SignConvergence {
  Table table{{"L", "resnet_error", "series_error", "bound"}};
  RateFit resnet_fit;  ///< against 2^L
  RateFit series_fit;  ///< against L
};

inline SignConvergence sign_convergence(int max_depth, double p, const QuadratureConfig& quad = {}) {
  if (max_depth < 2) throw DomainError("max depth must be >= 2");
  if (!(p > 0.0)) throw DomainError("p must be > 0");
  SignConvergence out;
  std::vector<double> two_l, ls, resnet_errs, series_errs;
  for (int l = 1; l <= max_depth; ++l) {
    const double e_net = lp_error(sign_fn, build_sign_net(l), p, quad);
    const double e_series = lp_error(sign_fn, truncated_sign_series(l), p, quad);
    const double bound = sign_error_bound(l, p);
    out.table.add_row({cell(l), cell(e_net), cell(e_series), cell(bound)});
    if (e_net > bound)
      throw ExperimentFailure("sign network error " + format_real(e_net) + " exceeds bound " + format_real(bound) +
                              " at L=" + std::to_string(l));
    two_l.push_back(std::exp2(l));
    ls.push_back(l);
    resnet_errs.push_back(e_net);
    series_errs.push_back(e_series);
  }
  out.resnet_fit = fit_rate(two_l, resnet_errs);
  out.series_fit = fit_rate(ls, series_errs);
  return out;
}

// convergence

struct ExperimentRow {
  std::string experiment;
  std::string target;
  int m = 0;
  int W = 0;
  int L = 0;
  std::size_t neurons = 0;
  double error_l1 = 0.0;
  double error_l2 = 0.0;
  std::optional<double> bound;
  std::optional<double> wall_ms;
  std::optional<double> residual_l2;  ///< ||r - R_W||_2, the width part of the error
};

inline const std::vector<std::string>& experiment_columns() {
  static const std::vector<std::string> cols{"experiment", "target", "m",        "W",     "L",      "neurons",
                                             "error_l1",   "error_l2", "bound", "wall_ms", "residual_l2"};
  return cols;
}

inline Table rows_to_table(const std::vector<ExperimentRow>& rows) {
  Table table(experiment_columns());
  for (const auto& r : rows)
    table.add_row({r.experiment, r.target, cell(r.m), cell(r.W), cell(r.L), cell(r.neurons), cell(r.error_l1),
                   cell(r.error_l2), cell(r.bound), cell(r.wall_ms), cell(r.residual_l2)});
  return table;
}

struct RateRow {
  std::string kind;  ///< "resnet", "residual" (||r - R_W|| alone) or "baseline"
  int m = 0;
  RateFit fit;
};

struct ConvergenceResult {
  std::vector<ExperimentRow> rows;
  std::vector<RateRow> rates;  ///< L2 error against W

  Table table() const { return rows_to_table(rows); }

  Table rates_table() const {
    Table t({"kind", "m", "slope", "intercept", "r_squared", "points_used"});
    for (const auto& r : rates)
      t.add_row({r.kind, cell(r.m), cell(r.fit.slope), cell(r.fit.intercept), cell(r.fit.r_squared),
                 cell(r.fit.points_used)});
    return t;
  }

  const RateFit& rate(const std::string& kind, int m) const {
    for (const auto& r : rates)
      if (r.kind == kind && r.m == m) return r.fit;
    throw LookupError("no rate for " + kind + " m=" + std::to_string(m));
  }
};

/// Terms of the truncated Fourier baseline matched to a network of depth L and width W.
inline int baseline_terms(int max_m, int width, int depth) { return depth + 1 + 4 * (max_m + 1) + width; }

struct ConvergenceOptions {
  std::string target = "pw_smooth";
  std::vector<int> ms{1, 2, 3, 4};
  std::vector<int> half_modes{5, 10, 20, 40, 80};
  int depth = 20;
  bool baseline = true;
  bool timing = false;
  QuadratureConfig quad{};
};

inline ConvergenceResult convergence(const ConvergenceOptions& opt) {
  if (opt.ms.empty() || opt.half_modes.empty()) throw DomainError("m and mode lists must be non-empty");
  const PiecewiseTarget target = targets::lookup(opt.target);
  std::vector<int> ms = opt.ms, ks = opt.half_modes;
  std::sort(ms.begin(), ms.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

  using clock = std::chrono::steady_clock;
  ConvergenceResult out;
  for (int m : ms) {
    std::vector<double> ws, errs, resid;
    for (int k : ks) {
      const auto t0 = clock::now();
      const PiecewiseConstruction pc(BuildSpec{target, m, k, opt.depth, opt.quad});
      ExperimentRow row;
      row.experiment = "resnet";
      row.target = opt.target;
      row.m = m;
      row.W = 2 * k;
      row.L = pc.shallow() ? 1 : opt.depth;
      row.neurons = pc.network().neuron_count();
      row.error_l1 = lp_error(target, pc.network(), 1.0, opt.quad);
      row.error_l2 = lp_error(target, pc.network(), 2.0, opt.quad);
      row.residual_l2 = lp_error([&](double x) { return pc.r(x); }, [&](double x) { return pc.R(x); }, 2.0, opt.quad);
      if (opt.timing) row.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      ws.push_back(row.W);
      errs.push_back(row.error_l2);
      resid.push_back(*row.residual_l2);
      out.rows.push_back(std::move(row));
    }
    if (ws.size() >= 2 && ws.front() > 0.0) {
      out.rates.push_back({"resnet", m, fit_rate(ws, errs)});
      if (std::all_of(resid.begin(), resid.end(), [](double e) { return e > 0.0; }))
        out.rates.push_back({"residual", m, fit_rate(ws, resid)});
    }
  }
  if (opt.baseline) {
    const int max_m = ms.back();
    std::vector<double> ws, errs;
    for (int k : ks) {
      const auto t0 = clock::now();
      const int terms = baseline_terms(max_m, 2 * k, opt.depth);
      const auto series = fourier_coeffs(target, (terms - 1) / 2, opt.quad);
      ExperimentRow row;
      row.experiment = "baseline";
      row.target = opt.target;
      row.m = max_m;
      row.W = 2 * k;
      row.L = 0;
      row.neurons = static_cast<std::size_t>(2 * ((terms - 1) / 2) + 1);
      row.error_l1 = lp_error(target, series, 1.0, opt.quad);
      row.error_l2 = lp_error(target, series, 2.0, opt.quad);
      if (opt.timing) row.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      ws.push_back(row.W);
      errs.push_back(row.error_l2);
      out.rows.push_back(std::move(row));
    }
    if (ws.size() >= 2 && ws.front() > 0.0) out.rates.push_back({"baseline", max_m, fit_rate(ws, errs)});
  }
  return out;
}

// gibbs

struct GibbsOptions {
  std::string target = "pw_smooth";
  int m = 1;
  int half_modes = 5;
  std::vector<int> depths{3, 4, 5, 6, 7};
  double threshold = 0.02;
  int grid_n = kDefaultGridPoints;
  QuadratureConfig quad{};
};

struct GibbsResult {
  Table table{{"L", "support_width", "max_overshoot"}};
  bool non_increasing = true;
};

/// Support width of |f - F| > threshold per depth; overshoot is measured against the target's range on the grid.
inline GibbsResult gibbs(const GibbsOptions& opt) {
  if (opt.depths.empty()) throw DomainError("depth list must be non-empty");
  if (!std::is_sorted(opt.depths.begin(), opt.depths.end())) throw DomainError("depths must be sorted ascending");
  const PiecewiseTarget target = targets::lookup(opt.target);
  double lo = INFINITY, hi = -INFINITY;
  for (double x : diagnostic_grid(opt.grid_n)) {
    const double v = target.eval(x);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  GibbsResult out;
  double previous = INFINITY;
  for (int depth : opt.depths) {
    const auto net = build_piecewise_net(BuildSpec{target, opt.m, opt.half_modes, depth, opt.quad});
    const double width = gibbs_support_width(target, net, opt.threshold, opt.grid_n);
    const double overshoot = max_overshoot(net, lo, hi, opt.grid_n);
    out.table.add_row({cell(depth), cell(width), cell(overshoot)});
    if (width > previous) out.non_increasing = false;
    previous = width;
  }
  return out;
}

// eval

inline Table eval_table(const FourierResNet& net, int grid_n) {
  Table table({"x", "value"});
  for (double x : uniform_grid(grid_n)) table.add_row({cell(x), cell(net.eval(x))});
  return table;
}

}  // namespace fresnet
