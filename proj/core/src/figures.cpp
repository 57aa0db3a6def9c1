#include "splitnlc/figures.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "splitnlc/csv_store.hpp"
#include "splitnlc/sweep.hpp"
#include "splitnlc/units.hpp"
#include "splitnlc/version.hpp"

namespace splitnlc::experiments {
namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

/// Reference study parameters (80 km spans, 26 dB transceiver).
Scenario base_scenario(std::uint64_t seed) {
  Scenario s;
  s.seed = seed;
  return s;
}

std::vector<int> span_axis() {
  std::vector<int> n;
  for (int i = 1; i <= 120; ++i) n.push_back(i);
  return n;
}

std::string write_gnuplot(const std::string& out_dir, const std::string& name,
                          const std::string& body) {
  const auto path = fs::path(out_dir) / (name + ".gp");
  std::ofstream out(path, std::ios::trunc);
  out << "# gnuplot script for " << name << " (generated by splitnlc "
      << kVersion << ")\n";
  out << "set grid\nset key bottom left\n";
  out << body;
  return path.string();
}

std::vector<std::string> fig2(const FigureOptions& opt) {
  std::vector<std::string> paths;
  const std::vector<double> kappas = {0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  for (double kr : kappas) {
    char fname[64];
    std::snprintf(fname, sizeof(fname), "fig2_kr%03d.csv",
                  static_cast<int>(std::lround(kr * 100)));
    const auto path = fs::path(opt.out_dir) / fname;
    std::ofstream out(path, std::ios::trunc);
    out << "# splitnlc reach-gain curve, kappa_r = " << fmt(kr) << "\n";
    out << "# engine_version: " << kVersion << "\n";
    out << "epsilon,reach_gain_exact,reach_gain_small_eps\n";
    // 100 log-spaced coherence factors over [0.01, 1].
    for (int i = 0; i <= 99; ++i) {
      const double eps = std::pow(10.0, -2.0 + 2.0 * i / 99.0);
      out << fmt(eps) << ',' << fmt(analytic::reach_gain_trx(kr, eps)) << ','
          << fmt(analytic::reach_gain_trx(kr, eps, true)) << "\n";
    }
    paths.push_back(path.string());
  }
  paths.push_back(write_gnuplot(
      opt.out_dir, "fig2",
      "set datafile separator ','\n"
      "set logscale x\n"
      "set xlabel 'coherence factor'\nset ylabel 'reach gain over dbp'\n"
      "plot for [kr in \"050 060 070 080 090 095\"] \\\n"
      "  sprintf('fig2_kr%s.csv', kr) using 1:2 with lines title 'kr=0.'.kr, \\\n"
      "  for [kr in \"050 060 070 080 090 095\"] \\\n"
      "  sprintf('fig2_kr%s.csv', kr) using 1:3 with lines dt 2 notitle\n"));
  return paths;
}

// Runs one scenario and stores it as a per-curve result file.
std::string run_and_save(Scenario s, const FigureOptions& opt) {
  RunOptions run;
  run.threads = opt.threads;
  const auto result = run_scenario(s, run);
  return save_result(result, opt.out_dir);
}

std::vector<std::string> fig_snr_vs_distance(const FigureOptions& opt,
                                             const std::string& fig_name,
                                             double kappa_r,
                                             bool include_ideal_trx,
                                             bool include_optimal_split) {
  std::vector<std::string> paths;
  std::vector<std::string> schemes = {"edc", "dbp", "dpc", "half"};
  if (include_optimal_split) schemes.push_back("opt");

  auto make = [&](const std::string& suffix, double snr_trx_db,
                  const std::string& engine, const std::vector<int>& spans) {
    Scenario s = base_scenario(opt.seed);
    s.id = fig_name + "_" + suffix;
    s.kappa_r = kappa_r;
    s.snr_trx_db = snr_trx_db;
    s.engine = engine;
    s.schemes = schemes;
    s.span_counts = spans;
    paths.push_back(run_and_save(s, opt));
  };

  make("trx26", 26.0, "analytic", span_axis());
  if (include_ideal_trx)
    make("ideal", std::numeric_limits<double>::infinity(), "analytic", span_axis());
  if (opt.mode == FigureMode::Both) {
    make("trx26_sim", 26.0, "both", opt.simulated_spans);
    if (include_ideal_trx)
      make("ideal_sim", std::numeric_limits<double>::infinity(), "both",
           opt.simulated_spans);
  }

  paths.push_back(write_gnuplot(
      opt.out_dir, fig_name,
      "set datafile separator ','\n"
      "set xlabel 'span count'\nset ylabel 'SNR at optimum power [dB]'\n"
      "plot '" + fig_name +
          "_trx26.csv' every ::1 using 4:(strcol(2) eq 'analytic' ? $7 : NaN) \\\n"
          "  with points pt 7 ps 0.3 title 'model'\n"));
  return paths;
}

std::vector<std::string> fig4b(const FigureOptions& opt) {
  std::vector<std::string> paths;
  for (int n : {16, 34, 120}) {
    Scenario s = base_scenario(opt.seed);
    s.id = "fig4b_n" + std::to_string(n);
    s.kappa_r = 0.8;
    s.engine = "analytic";
    s.span_counts = {n};
    s.schemes.clear();
    for (int x = 0; x <= n; ++x) s.schemes.push_back("x" + std::to_string(x));
    if (opt.mode == FigureMode::Both && n <= 40) s.engine = "both";
    paths.push_back(run_and_save(s, opt));
  }
  paths.push_back(write_gnuplot(
      opt.out_dir, "fig4b",
      "set datafile separator ','\n"
      "set xlabel 'split ratio X/N'\nset ylabel 'SNR gain over dbp [dB]'\n"
      "# baseline per file: the X=0 row is the dbp reference\n"
      "plot 'fig4b_n16.csv' every ::1 using ($5/$4):($7) with lines title 'N=16', \\\n"
      "     'fig4b_n34.csv' every ::1 using ($5/$4):($7) with lines title 'N=34', \\\n"
      "     'fig4b_n120.csv' every ::1 using ($5/$4):($7) with lines title 'N=120'\n"));
  return paths;
}

std::vector<std::string> fig5(const FigureOptions& opt) {
  std::vector<std::string> paths;
  Scenario s = base_scenario(opt.seed);
  s.id = "fig5";
  s.kappa_r = 0.8;
  s.engine = "analytic";
  s.mi_enabled = true;
  s.span_counts = span_axis();
  paths.push_back(run_and_save(s, opt));
  paths.push_back(write_gnuplot(
      opt.out_dir, "fig5",
      "set datafile separator ','\n"
      "set xlabel 'span count'\nset ylabel 'MI per channel [bit/symbol]'\n"
      "plot 'fig5.csv' every ::1 using 4:8 with points pt 7 ps 0.3 title 'MI'\n"));
  return paths;
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = {"fig2", "fig3", "fig4a",
                                                 "fig4b", "fig5"};
  return names;
}

std::vector<std::string> figure(const std::string& name, const FigureOptions& opt) {
  std::filesystem::create_directories(opt.out_dir);
  if (name == "fig2") return fig2(opt);
  if (name == "fig3") return fig_snr_vs_distance(opt, "fig3", 0.5, true, false);
  if (name == "fig4a") return fig_snr_vs_distance(opt, "fig4a", 0.8, false, true);
  if (name == "fig4b") return fig4b(opt);
  if (name == "fig5") return fig5(opt);
  throw std::invalid_argument("unknown figure: " + name +
                              " (expected fig2|fig3|fig4a|fig4b|fig5)");
}

}  // namespace splitnlc::experiments
