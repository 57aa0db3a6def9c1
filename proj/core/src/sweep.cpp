#include "splitnlc/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "splitnlc/chain.hpp"
#include "splitnlc/estimators.hpp"
#include "splitnlc/rng.hpp"
#include "splitnlc/thread_pool.hpp"
#include "splitnlc/units.hpp"
#include "splitnlc/version.hpp"

namespace splitnlc::experiments {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct Task {
  std::string scheme_name;
  analytic::Scheme scheme;
  int n = 0;
  int x = 0;
  std::string engine;
  double p_dbm = 0.0;
};

std::vector<double> power_grid_dbm(const Scenario& s, double analytic_opt_dbm) {
  double lo, hi;
  if (s.power_dbm_min) {
    lo = *s.power_dbm_min;
    hi = *s.power_dbm_max;
  } else {
    lo = analytic_opt_dbm - s.auto_power_halfspan_db;
    hi = analytic_opt_dbm + s.auto_power_halfspan_db;
  }
  std::vector<double> grid;
  for (double p = lo; p <= hi + 1e-9; p += s.power_dbm_step) grid.push_back(p);
  return grid;
}

SweepRow nan_row(const Scenario& s, const Task& t) {
  SweepRow row;
  row.scenario_id = s.id;
  row.engine = t.engine;
  row.scheme = t.scheme_name;
  row.n = t.n;
  row.x = t.x;
  row.p_dbm = t.p_dbm;
  row.snr_db = kNan;
  row.mi_bits = kNan;
  row.std_err = kNan;
  row.runtime_s = 0.0;
  return row;
}

SweepRow run_analytic_task(const Scenario& s, const Task& t) {
  SweepRow row = nan_row(s, t);
  const auto link = s.link_params(t.n);
  const auto trx = s.trx_params();
  const auto scheme = t.scheme.kind == analytic::Scheme::Kind::OptimalSplit
                          ? analytic::Scheme::fixed_split(t.x)
                          : t.scheme;
  double p_w;
  double snr;
  if (t.p_dbm == t.p_dbm) {  // pinned grid power (both-engine mode)
    p_w = watt_from_dbm(t.p_dbm);
    snr = scheme.kind == analytic::Scheme::Kind::Edc
              ? analytic::snr_edc(p_w, link, trx)
              : analytic::snr_nlc(p_w, link, trx, {t.x});
  } else {
    p_w = analytic::optimal_launch_power(link, trx, scheme);
    snr = scheme.kind == analytic::Scheme::Kind::Edc
              ? analytic::snr_edc(p_w, link, trx)
              : analytic::snr_nlc(p_w, link, trx, {t.x});
    row.p_dbm = dbm_from_watt(p_w);
  }
  row.snr_db = db_from_linear(snr);
  if (s.mi_enabled) {
    const auto constellation = dsp::qam_constellation(s.modulation_order);
    const auto mi = dsp::mi_for_awgn_snr(
        snr, constellation, s.mi_samples,
        CounterRng::mix(s.seed ^ derive_stream("mi", t.n, t.x)));
    row.mi_bits = 2.0 * mi.mi;  // per channel: both polarizations
    row.std_err = 2.0 * mi.std_error;
  }
  return row;
}

SweepRow run_simulation_task(const Scenario& s, const Task& t) {
  SweepRow row = nan_row(s, t);
  fiber::ChainScenario chain;
  chain.num_spans = t.n;
  chain.scheme = t.scheme.kind == analytic::Scheme::Kind::OptimalSplit
                     ? analytic::Scheme::fixed_split(t.x)
                     : t.scheme;
  chain.launch_power_w = watt_from_dbm(t.p_dbm);
  chain.fiber = s.fiber_params();
  chain.amp = s.amp_params();
  chain.ssf = s.ssf_config();
  chain.snr_trx = s.snr_trx_linear();
  chain.kappa_r = s.kappa_r;
  chain.num_channels = s.num_channels;
  chain.symbol_rate_hz = s.symbol_rate_gbd * 1e9;
  chain.channel_spacing_hz = s.channel_spacing_ghz * 1e9;
  chain.oversampling = s.oversampling;
  chain.n_symbols = s.n_symbols;
  chain.modulation_order = s.modulation_order;
  chain.seed = CounterRng::mix(
      s.seed ^ derive_stream("sim", static_cast<std::uint64_t>(t.n) * 1000 + t.x,
                             static_cast<std::uint64_t>(
                                 std::llround((t.p_dbm + 100.0) * 100.0))));

  const auto chain_result = fiber::run_split_nlc_chain(chain);
  row.snr_db = db_from_linear(dsp::snr_estimate(chain_result.tx, chain_result.rx));
  if (s.mi_enabled) {
    const auto constellation = dsp::qam_constellation(s.modulation_order);
    const auto mi = dsp::mi_monte_carlo(chain_result.tx, chain_result.rx, constellation);
    row.mi_bits = 2.0 * mi.mi;
    row.std_err = 2.0 * mi.std_error;
  }
  return row;
}

}  // namespace

SweepResult run_scenario(const Scenario& s, const RunOptions& options) {
  s.validate();
  SweepResult result;
  result.schema_version = kResultSchemaVersion;
  result.scenario_id = s.id;
  result.scenario_hash = s.hash();
  result.seed = s.seed;
  result.engine_version = kVersion;

  const bool analytic_on = s.engine == "analytic" || s.engine == "both";
  const bool sim_on = s.engine == "simulation" || s.engine == "both";

  std::vector<Task> tasks;
  for (const auto& scheme_name : s.schemes) {
    const auto scheme = analytic::scheme_from_name(scheme_name);
    for (int n : s.span_counts) {
      const auto link = s.link_params(n);
      const auto trx = s.trx_params();
      const int x = analytic::resolve_split(scheme, link, trx);
      if (analytic_on) {
        tasks.push_back({scheme_name, scheme, n, x, "analytic", kNan});
      }
      if (sim_on) {
        const auto pinned = scheme.kind == analytic::Scheme::Kind::OptimalSplit
                                ? analytic::Scheme::fixed_split(x)
                                : scheme;
        const double p_opt_dbm =
            dbm_from_watt(analytic::optimal_launch_power(link, trx, pinned));
        if (s.power_dbm_min &&
            (p_opt_dbm < *s.power_dbm_min || p_opt_dbm > *s.power_dbm_max)) {
          std::cerr << "splitnlc: warning: " << scheme_name << " N=" << n
                    << " model optimum " << p_opt_dbm
                    << " dBm lies outside the explicit power grid\n";
        }
        for (double p : power_grid_dbm(s, p_opt_dbm)) {
          tasks.push_back({scheme_name, scheme, n, x, "simulation", p});
          if (analytic_on)  // matched-point analytic row for model-vs-run deltas
            tasks.push_back({scheme_name, scheme, n, x, "analytic", p});
        }
      }
    }
  }

  std::vector<SweepRow> rows(tasks.size());
  parallel_for(tasks.size(), options.threads, [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      rows[i] = tasks[i].engine == "analytic" ? run_analytic_task(s, tasks[i])
                                              : run_simulation_task(s, tasks[i]);
    } catch (const std::exception& e) {
      std::cerr << "splitnlc: task failed (" << tasks[i].scheme_name << " N="
                << tasks[i].n << " P=" << tasks[i].p_dbm << " dBm): " << e.what()
                << "\n";
      rows[i] = nan_row(s, tasks[i]);
    }
    if (options.record_timing) {
      rows[i].runtime_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
    }
  });

  result.rows = std::move(rows);
  return result;
}

ParabolicFit parabolic_vertex(double x0, double y0, double x1, double y1,
                              double x2, double y2) {
  const double d21 = (y2 - y1) / (x2 - x1);
  const double d10 = (y1 - y0) / (x1 - x0);
  const double a = (d21 - d10) / (x2 - x0);
  if (a >= 0.0) return {x1, y1};  // flat or degenerate: keep the grid maximum
  const double b = d10 - a * (x0 + x1);
  const double x_opt = -b / (2.0 * a);
  const double c = y0 - (a * x0 + b) * x0;
  return {x_opt, (a * x_opt + b) * x_opt + c};
}

ParabolicFit fitted_optimum(const SweepResult& result, const std::string& scheme,
                            int n) {
  std::vector<const SweepRow*> rows;
  for (const auto& r : result.rows) {
    if (r.engine == "simulation" && r.scheme == scheme && r.n == n &&
        r.snr_db == r.snr_db)
      rows.push_back(&r);
  }
  if (rows.empty()) throw std::runtime_error("no simulated rows for the fit");
  std::sort(rows.begin(), rows.end(),
            [](const SweepRow* a, const SweepRow* b) { return a->p_dbm < b->p_dbm; });
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i]->snr_db > rows[best]->snr_db) best = i;
  if (best == 0 || best + 1 == rows.size())
    return {rows[best]->p_dbm, rows[best]->snr_db};  // optimum at the grid edge
  return parabolic_vertex(rows[best - 1]->p_dbm, rows[best - 1]->snr_db,
                          rows[best]->p_dbm, rows[best]->snr_db,
                          rows[best + 1]->p_dbm, rows[best + 1]->snr_db);
}

double engine_delta_percentile(const SweepResult& result, double percentile) {
  std::vector<double> deltas;
  for (const auto& a : result.rows) {
    if (a.engine != "analytic" || a.p_dbm != a.p_dbm || a.snr_db != a.snr_db)
      continue;
    for (const auto& b : result.rows) {
      if (b.engine == "simulation" && b.scheme == a.scheme && b.n == a.n &&
          std::abs(b.p_dbm - a.p_dbm) < 1e-9 && b.snr_db == b.snr_db)
        deltas.push_back(std::abs(a.snr_db - b.snr_db));
    }
  }
  if (deltas.empty()) return 0.0;
  std::sort(deltas.begin(), deltas.end());
  // Nearest-rank percentile.
  const double p = std::clamp(percentile, 0.0, 1.0);
  const auto rank = static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(deltas.size())));
  return deltas[rank == 0 ? 0 : rank - 1];
}

}  // namespace splitnlc::experiments
