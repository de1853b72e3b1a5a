// Command-line driver: builds, evaluates and serializes Fourier residual
// networks and runs the convergence experiments as CSV tables.
//
// Exit codes: 0 success, 2 usage or unknown name, 3 experiment check failed, 4 I/O.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fresnet/fresnet.hpp"

namespace {

using namespace fresnet;

constexpr int kExitUsage = 2;
constexpr int kExitExperiment = 3;
constexpr int kExitIo = 4;

void write_outputs(const Table& table, const std::string& out, const std::string& svg_path, const std::string& svg) {
  write_text_file(out, table.to_csv());
  if (!svg_path.empty()) write_text_file(svg_path, svg);
}

std::string join_widths(const std::vector<std::size_t>& widths) {
  std::string s;
  for (std::size_t i = 0; i < widths.size(); ++i) s += (i ? "," : "") + std::to_string(widths[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier residual networks for piecewise smooth functions"};
  app.require_subcommand(1);

  QuadratureConfig quad;
  app.add_option("--panels", quad.panels_per_side, "uniform quadrature panels per half-interval")->capture_default_str();
  app.add_option("--nodes", quad.nodes_per_panel, "Gauss-Legendre nodes per panel")->capture_default_str();
  app.add_option("--grading", quad.grading_ratio, "geometric grading ratio toward 0")->capture_default_str();

  // sign-curves
  std::vector<int> curve_depths{5, 20};
  int curve_grid = 2001;
  std::string curve_out, curve_svg;
  auto* sc = app.add_subcommand("sign-curves", "sign network and truncated sine series on a grid");
  sc->add_option("--depths", curve_depths, "depths to tabulate")->delimiter(',')->capture_default_str();
  sc->add_option("--grid", curve_grid, "grid points on [-1, 1]")->capture_default_str()->check(CLI::Range(2, 10000000));
  sc->add_option("--out", curve_out, "CSV output path")->required();
  sc->add_option("--svg", curve_svg, "optional SVG chart path");

  // sign-convergence
  int conv_depth = 20;
  double conv_p = 1.0;
  std::string sconv_out, sconv_svg;
  auto* sv = app.add_subcommand("sign-convergence", "Lp error of the sign network and sine series per depth");
  sv->add_option("--max-depth", conv_depth, "largest depth")->capture_default_str()->check(CLI::Range(2, 1000));
  sv->add_option("--p", conv_p, "norm exponent")->capture_default_str();
  sv->add_option("--out", sconv_out, "CSV output path")->required();
  sv->add_option("--svg", sconv_svg, "optional SVG chart path");

  // build
  std::string build_target, build_out;
  int build_m = 1, build_k = 3, build_depth = 5;
  auto* bd = app.add_subcommand("build", "build a network for a registered target and save it");
  bd->add_option("--target", build_target, "target name")->required();
  bd->add_option("--m", build_m, "smoothness order")->capture_default_str();
  bd->add_option("--modes", build_k, "half number of residual modes K (W = 2K)")->capture_default_str();
  bd->add_option("--depth", build_depth, "sign network depth L")->capture_default_str();
  bd->add_option("--out", build_out, "network output path (.fnet.json)")->required();

  // eval
  std::string eval_net, eval_out;
  int eval_grid = 2001;
  auto* ev = app.add_subcommand("eval", "evaluate a saved network on a grid");
  ev->add_option("--net", eval_net, "network file")->required();
  ev->add_option("--grid", eval_grid, "grid points on [-1, 1]")->capture_default_str()->check(CLI::Range(2, 10000000));
  ev->add_option("--out", eval_out, "CSV output path")->required();

  // convergence
  ConvergenceOptions copt;
  std::string cv_out, cv_rates, cv_svg;
  bool cv_no_baseline = false;
  auto* cv = app.add_subcommand("convergence", "L1/L2 error against residual width, with a Fourier baseline");
  cv->add_option("--target", copt.target, "target name")->capture_default_str();
  cv->add_option("--m", copt.ms, "smoothness orders")->delimiter(',')->capture_default_str();
  cv->add_option("--modes-list", copt.half_modes, "half mode counts K (W = 2K)")->delimiter(',')->capture_default_str();
  cv->add_option("--depth", copt.depth, "sign network depth L")->capture_default_str();
  cv->add_flag("--no-baseline", cv_no_baseline, "skip truncated Fourier baseline rows");
  cv->add_flag("--timing", copt.timing, "fill the wall_ms column (output is then not reproducible)");
  cv->add_option("--out", cv_out, "CSV output path")->required();
  cv->add_option("--rates", cv_rates, "optional CSV of fitted slopes");
  cv->add_option("--svg", cv_svg, "optional SVG chart path");

  // gibbs
  GibbsOptions gopt;
  std::string gb_out, gb_svg;
  auto* gb = app.add_subcommand("gibbs", "support of oscillations above a threshold per depth");
  gb->add_option("--target", gopt.target, "target name")->capture_default_str();
  gb->add_option("--m", gopt.m, "smoothness order")->capture_default_str();
  gb->add_option("--modes", gopt.half_modes, "half number of residual modes K")->capture_default_str();
  gb->add_option("--depths", gopt.depths, "depths, ascending")->delimiter(',')->capture_default_str();
  gb->add_option("--threshold", gopt.threshold, "error threshold")->capture_default_str();
  gb->add_option("--grid", gopt.grid_n, "grid points")->capture_default_str()->check(CLI::Range(2, 10000000));
  gb->add_option("--out", gb_out, "CSV output path")->required();
  gb->add_option("--svg", gb_svg, "optional SVG chart path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help requests exit 0; everything else is a usage error
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    quad.validate();
    copt.quad = quad;
    gopt.quad = quad;

    if (sc->parsed()) {
      const Table t = sign_curves(curve_depths, curve_grid);
      std::vector<std::string> ys{"sgn"};
      for (std::size_t c = 2; c < t.columns().size(); ++c) ys.push_back(t.columns()[c]);
      write_outputs(t, curve_out, curve_svg,
                    curve_svg.empty() ? "" : render_svg("sign approximations", table_series(t, "x", ys)));
      std::printf("wrote %zu rows to %s\n", t.rows().size(), curve_out.c_str());
    } else if (sv->parsed()) {
      const auto r = sign_convergence(conv_depth, conv_p, quad);
      write_outputs(r.table, sconv_out, sconv_svg,
                    sconv_svg.empty() ? ""
                                      : render_svg("sign convergence", table_series(r.table, "L", {"resnet_error", "series_error", "bound"}),
                                                   false, true));
      std::printf("resnet slope vs 2^L: %s\nseries slope vs L: %s\n", format_real(r.resnet_fit.slope).c_str(),
                  format_real(r.series_fit.slope).c_str());
    } else if (bd->parsed()) {
      const PiecewiseConstruction pc(BuildSpec{targets::lookup(build_target), build_m, build_k, build_depth, quad});
      save(pc.network(), build_out);
      std::printf("neurons: %zu\nlayer widths: %s\ndepth: %zu\n", pc.network().neuron_count(),
                  join_widths(pc.network().layer_widths()).c_str(), pc.network().depth());
    } else if (ev->parsed()) {
      const auto net = load(eval_net);
      write_text_file(eval_out, eval_table(net, eval_grid).to_csv());
      std::printf("wrote %d rows to %s\n", eval_grid, eval_out.c_str());
    } else if (cv->parsed()) {
      copt.baseline = !cv_no_baseline;
      const auto r = convergence(copt);
      const Table t = r.table();
      std::string svg;
      if (!cv_svg.empty()) {
        std::vector<ChartSeries> series;
        for (const auto& rate : r.rates) {
          ChartSeries s{rate.kind + (rate.kind == "resnet" ? " m=" + std::to_string(rate.m) : ""), {}, {}};
          for (const auto& row : r.rows)
            if (row.experiment == rate.kind && row.m == rate.m) {
              s.xs.push_back(row.W);
              s.ys.push_back(row.error_l2);
            }
          series.push_back(std::move(s));
        }
        svg = render_svg("L2 error vs W (" + copt.target + ")", series, true, true);
      }
      write_outputs(t, cv_out, cv_svg, svg);
      if (!cv_rates.empty()) write_text_file(cv_rates, r.rates_table().to_csv());
      for (const auto& rate : r.rates)
        std::printf("%s m=%d slope %s\n", rate.kind.c_str(), rate.m, format_real(rate.fit.slope).c_str());
    } else if (gb->parsed()) {
      const auto r = gibbs(gopt);
      write_outputs(r.table, gb_out, gb_svg,
                    gb_svg.empty() ? "" : render_svg("oscillation support vs depth", table_series(r.table, "L", {"support_width"})));
      if (!r.non_increasing) {
        std::fprintf(stderr, "error: support width increased with depth\n");
        return kExitExperiment;
      }
    }
  } catch (const LookupError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const UnsupportedOrderError& e) {
    std::fprintf(stderr, "error: %s (max_order %d)\n", e.what(), e.max_order);
    return kExitUsage;
  } catch (const ExperimentFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitExperiment;
  } catch (const SolverError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitExperiment;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return 0;
}
