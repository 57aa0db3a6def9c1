// splitnlc: analytic SNR model and split-step simulator for digitally
// compensated optical links with transceiver noise.
//
// Exit codes: 0 success, 1 usage error, 2 runtime/engine error.
// stderr carries progress; stdout carries only results and artifact paths.

#include <cmath>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitnlc/analytic.hpp"
#include "splitnlc/csv_store.hpp"
#include "splitnlc/figures.hpp"
#include "splitnlc/scenario.hpp"
#include "splitnlc/sweep.hpp"
#include "splitnlc/units.hpp"
#include "splitnlc/version.hpp"

namespace {

using namespace splitnlc;
using experiments::Scenario;

struct ScenarioArgs {
  std::string path;
  std::vector<std::string> overrides;
  bool have_kappa_r = false;
  double kappa_r = 0.5;
  bool have_snr_trx = false;
  double snr_trx_db = 26.0;
  bool have_epsilon = false;
  double epsilon = 0.108;
};

// Precedence: flags > scenario file > built-in reference defaults.
Scenario resolve_scenario(const ScenarioArgs& args) {
  Scenario s;
  if (!args.path.empty()) s = experiments::load_scenario(args.path);
  for (const auto& kv : args.overrides) experiments::apply_override(s, kv);
  if (args.have_kappa_r) s.kappa_r = args.kappa_r;
  if (args.have_snr_trx) s.snr_trx_db = args.snr_trx_db;
  if (args.have_epsilon) s.epsilon = args.epsilon;
  s.validate();
  return s;
}

void add_scenario_flags(CLI::App* cmd, ScenarioArgs& args) {
  cmd->add_option("--scenario", args.path, "Scenario file (JSON; see scenarios/)");
  cmd->add_option("--set", args.overrides,
                  "Override a scenario key, key=value (repeatable; same unit-"
                  "suffixed keys as the file)");
  cmd->add_option("--kappa-r", args.kappa_r,
                  "Receiver share of transceiver noise, dimensionless in [0,1]")
      ->check(CLI::Range(0.0, 1.0))
      ->trigger_on_parse()
      ->each([&args](const std::string&) { args.have_kappa_r = true; });
  cmd->add_option("--snr-trx-db", args.snr_trx_db,
                  "Back-to-back transceiver SNR, dB")
      ->each([&args](const std::string&) { args.have_snr_trx = true; });
  cmd->add_option("--epsilon", args.epsilon, "Coherence factor, dimensionless")
      ->each([&args](const std::string&) { args.have_epsilon = true; });
}

int run_analytic_snr(const Scenario& s, int n, const std::string& scheme_name,
                     double power_dbm, bool at_optimum) {
  const auto link = s.link_params(n);
  const auto trx = s.trx_params();
  const auto scheme = analytic::scheme_from_name(scheme_name);
  const int x = analytic::resolve_split(scheme, link, trx);
  const auto pinned = scheme.kind == analytic::Scheme::Kind::OptimalSplit
                          ? analytic::Scheme::fixed_split(x)
                          : scheme;
  double p_w = watt_from_dbm(power_dbm);
  if (at_optimum) p_w = analytic::optimal_launch_power(link, trx, pinned);
  const double snr = pinned.kind == analytic::Scheme::Kind::Edc
                         ? analytic::snr_edc(p_w, link, trx)
                         : analytic::snr_nlc(p_w, link, trx, {x});
  std::cout << "scheme=" << scheme_name << " N=" << n << " X=" << x
            << " P_dBm=" << dbm_from_watt(p_w) << " SNR_dB=" << db_from_linear(snr)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic SNR model and Manakov split-step simulator for "
               "split nonlinearity compensation with transceiver noise"};
  app.set_version_flag("--version", splitnlc::kVersion);
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads,
                 "Worker threads for sweeps (0 = machine parallelism)");

  // ---- analytic ----
  auto* analytic_cmd =
      app.add_subcommand("analytic", "Closed-form model queries");
  analytic_cmd->require_subcommand(1);

  ScenarioArgs snr_args;
  int snr_n = 10;
  std::string snr_scheme = "dbp";
  double snr_power_dbm = 0.0;
  bool snr_at_opt = false;
  auto* snr_cmd = analytic_cmd->add_subcommand("snr", "SNR of one scheme");
  add_scenario_flags(snr_cmd, snr_args);
  snr_cmd->add_option("--n", snr_n, "Span count")->check(CLI::PositiveNumber);
  snr_cmd->add_option("--scheme", snr_scheme,
                      "edc | dbp | dpc | half | opt | x<k>");
  snr_cmd->add_option("--power-dbm", snr_power_dbm, "Launch power per channel, dBm");
  snr_cmd->add_flag("--at-optimum", snr_at_opt, "Evaluate at the optimum launch power");

  ScenarioArgs gain_args;
  bool gain_exact = false;
  bool gain_vs_dpc = false;
  auto* gain_cmd = analytic_cmd->add_subcommand(
      "reach-gain", "Reach gain of optimal split over receiver-only "
                    "compensation in the transceiver-beating regime");
  add_scenario_flags(gain_cmd, gain_args);
  gain_cmd->add_flag("--exact", gain_exact,
                     "Use the exact expression instead of the small-coherence form");
  gain_cmd->add_flag("--vs-dpc", gain_vs_dpc,
                     "Gain relative to transmitter-only compensation");

  ScenarioArgs split_args;
  int split_n = 10;
  bool split_brute = false;
  auto* split_cmd =
      analytic_cmd->add_subcommand("split", "Optimal transmitter-side span count");
  add_scenario_flags(split_cmd, split_args);
  split_cmd->add_option("--n", split_n, "Span count")->check(CLI::PositiveNumber);
  split_cmd->add_flag("--bruteforce", split_brute,
                      "Exhaustive search over the full model instead of the "
                      "regime closed form");

  // ---- simulate ----
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Run the scenario sweep (waveform simulation per its engine)");
  ScenarioArgs sim_args;
  std::string sim_out = "results";
  std::uint64_t sim_seed = 0;
  bool sim_have_seed = false;
  bool sim_timing = false;
  add_scenario_flags(sim_cmd, sim_args);
  sim_cmd->add_option("--out", sim_out, "Output directory for result CSV files");
  sim_cmd->add_option("--seed", sim_seed, "Seed override (deterministic artifacts)")
      ->each([&sim_have_seed](const std::string&) { sim_have_seed = true; });
  sim_cmd->add_flag("--record-timing", sim_timing,
                    "Record per-row wall time (makes artifacts non-reproducible)");

  // ---- figure ----
  auto* fig_cmd = app.add_subcommand("figure", "Reproduce a study figure");
  std::string fig_name;
  std::string fig_mode = "analytic";
  std::string fig_out = "figures";
  std::uint64_t fig_seed = 42;
  fig_cmd->add_option("name", fig_name, "fig2 | fig3 | fig4a | fig4b | fig5")
      ->required();
  fig_cmd->add_option("--mode", fig_mode, "analytic | both (adds simulation markers)")
      ->check(CLI::IsMember({"analytic", "both"}));
  fig_cmd->add_option("--out", fig_out, "Output directory");
  fig_cmd->add_option("--seed", fig_seed, "Seed for the Monte-Carlo parts");

  // ---- regime ----
  auto* regime_cmd = app.add_subcommand(
      "regime", "Classify the dominant signal-noise beating contribution");
  ScenarioArgs regime_args;
  std::vector<int> regime_spans;
  double regime_threshold_db = 10.0;
  double regime_target_crossover = 0.0;
  add_scenario_flags(regime_cmd, regime_args);
  regime_cmd->add_option("--n", regime_spans,
                         "Span counts to classify (defaults to the scenario axis)");
  regime_cmd->add_option("--threshold-db", regime_threshold_db,
                         "Dominance threshold, dB (one order of magnitude = 10)");
  regime_cmd->add_option("--target-crossover", regime_target_crossover,
                         "Also print the back-to-back SNR (dB) needed to move "
                         "the beating crossover to this span count");

  // ---- reach ----
  auto* reach_cmd = app.add_subcommand(
      "reach", "Largest span count meeting a target SNR at optimum power");
  ScenarioArgs reach_args;
  std::string reach_scheme = "opt";
  double reach_target_db = std::numeric_limits<double>::quiet_NaN();
  std::string reach_ref_scheme;
  int reach_ref_n = 0;
  int reach_cap = 4000;
  add_scenario_flags(reach_cmd, reach_args);
  reach_cmd->add_option("--scheme", reach_scheme, "Scheme whose reach is sought");
  reach_cmd->add_option("--target-snr-db", reach_target_db, "Target SNR, dB");
  reach_cmd->add_option("--reference-scheme", reach_ref_scheme,
                        "Take the target from this scheme's optimum SNR ...");
  reach_cmd->add_option("--reference-n", reach_ref_n, "... at this span count");
  reach_cmd->add_option("--span-cap", reach_cap, "Upper search bound, spans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage message
    return code == 0 ? 0 : 1;
  }

  try {
    if (snr_cmd->parsed())
      return run_analytic_snr(resolve_scenario(snr_args), snr_n, snr_scheme,
                              snr_power_dbm, snr_at_opt);

    if (gain_cmd->parsed()) {
      const Scenario s = resolve_scenario(gain_args);
      const double kr = gain_vs_dpc ? 1.0 - s.kappa_r : s.kappa_r;
      std::cout << analytic::reach_gain_trx(kr, s.epsilon, !gain_exact) << "\n";
      return 0;
    }

    if (split_cmd->parsed()) {
      const Scenario s = resolve_scenario(split_args);
      const auto plan =
          split_brute
              ? analytic::optimal_split_bruteforce(s.link_params(split_n),
                                                   s.trx_params())
              : analytic::optimal_split_trx_closed(split_n, s.kappa_r, s.epsilon);
      std::cout << "X=" << plan.x_tx_spans << " X/N="
                << static_cast<double>(plan.x_tx_spans) / split_n << "\n";
      return 0;
    }

    if (sim_cmd->parsed()) {
      Scenario s = resolve_scenario(sim_args);
      if (sim_have_seed) s.seed = sim_seed;
      if (s.span_counts.empty()) {
        std::cerr << "splitnlc: scenario has no span_counts; nothing to run\n";
        return 1;
      }
      experiments::RunOptions run;
      run.threads = threads;
      run.record_timing = sim_timing;
      std::cerr << "splitnlc: running scenario '" << s.id << "' (engine "
                << s.engine << ")\n";
      const auto result = experiments::run_scenario(s, run);
      std::cout << experiments::save_result(result, sim_out) << "\n";
      return 0;
    }

    if (fig_cmd->parsed()) {
      experiments::FigureOptions fopt;
      fopt.out_dir = fig_out;
      fopt.mode = fig_mode == "both" ? experiments::FigureMode::Both
                                     : experiments::FigureMode::Analytic;
      fopt.seed = fig_seed;
      fopt.threads = threads;
      std::cerr << "splitnlc: rendering " << fig_name << " (" << fig_mode << ")\n";
      for (const auto& path : experiments::figure(fig_name, fopt))
        std::cout << path << "\n";
      return 0;
    }

    if (regime_cmd->parsed()) {
      const Scenario s = resolve_scenario(regime_args);
      const auto trx = s.trx_params();
      const auto report =
          analytic::classify_regime(s.link_params(1).with_spans(1), trx,
                                    regime_threshold_db);
      std::cout << "crossover_spans=" << report.crossover_spans << "\n";
      std::cout << "ase_dominance_spans="
                << analytic::ase_dominance_spans(s.link_params(1), trx,
                                                 regime_threshold_db)
                << "\n";
      if (regime_target_crossover > 0.0) {
        std::cout << "required_snr_trx_db="
                  << analytic::required_snr_trx_db(s.link_params(1), trx,
                                                   regime_target_crossover)
                  << "\n";
      }
      std::vector<int> spans = regime_spans.empty() ? s.span_counts : regime_spans;
      for (int n : spans) {
        const auto rep =
            analytic::classify_regime(s.link_params(n), trx, regime_threshold_db);
        std::cout << "N=" << n << " regime=" << analytic::to_string(rep.regime)
                  << " trx_margin_db=" << rep.trx_margin_db
                  << " ase_margin_db=" << rep.ase_margin_db << "\n";
      }
      return 0;
    }

    if (reach_cmd->parsed()) {
      const Scenario s = resolve_scenario(reach_args);
      const auto trx = s.trx_params();
      double target_db = reach_target_db;
      if (!reach_ref_scheme.empty()) {
        if (reach_ref_n < 1) {
          std::cerr << "splitnlc: --reference-n is required with --reference-scheme\n";
          return 1;
        }
        target_db = db_from_linear(analytic::snr_at_optimum(
            s.link_params(reach_ref_n), trx,
            analytic::scheme_from_name(reach_ref_scheme)));
        std::cerr << "splitnlc: target from " << reach_ref_scheme << " at N="
                  << reach_ref_n << ": " << target_db << " dB\n";
      }
      if (std::isnan(target_db)) {
        std::cerr << "splitnlc: provide --target-snr-db or --reference-scheme\n";
        return 1;
      }
      const auto reach = analytic::max_reach(
          s.link_params(1), trx, analytic::scheme_from_name(reach_scheme),
          linear_from_db(target_db), reach_cap);
      std::cout << "reach_spans=" << reach.spans
                << (reach.saturated ? " (saturated at span cap)" : "") << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "splitnlc: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "splitnlc: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "splitnlc: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
