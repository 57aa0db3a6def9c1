#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitnlc/scenario.hpp"

namespace splitnlc::experiments {

/// One record of the tabular result store. MI values are per channel, i.e.
/// summed over both polarizations. Absent quantities are NaN.
struct SweepRow {
  std::string scenario_id;
  std::string engine;  ///< "analytic" or "simulation"
  std::string scheme;
  int n = 0;
  int x = 0;
  double p_dbm = 0.0;
  double snr_db = 0.0;
  double mi_bits = 0.0;
  double std_err = 0.0;
  double runtime_s = 0.0;
};

struct SweepResult {
  int schema_version = 0;
  std::string scenario_id;
  std::string scenario_hash;
  std::uint64_t seed = 0;
  std::string engine_version;
  std::vector<SweepRow> rows;
};

struct RunOptions {
  unsigned threads = 0;  ///< 0 = hardware concurrency
  /// Wall-clock timing is jitter; it is only recorded on request so that
  /// identical invocations produce identical artifacts.
  bool record_timing = false;
};

/// Executes the scenario's sweep grid. Analytic rows carry the model optimum
/// per (scheme, span count); simulation rows carry the measured SNR at every
/// grid power. Engine failures are reported as NaN rows on stderr and the
/// run continues. Row order is deterministic.
SweepResult run_scenario(const Scenario& s, const RunOptions& options = {});

/// Vertex of the parabola through three (x, y) points; used to interpolate
/// the optimum launch power from a coarse simulated grid.
struct ParabolicFit {
  double x_opt = 0.0;
  double y_opt = 0.0;
};
ParabolicFit parabolic_vertex(double x0, double y0, double x1, double y1,
                              double x2, double y2);

/// Fitted optimum (P_dBm, SNR_dB) of the simulated rows for one
/// (scheme, span count), from the grid maximum and its neighbors.
ParabolicFit fitted_optimum(const SweepResult& result, const std::string& scheme,
                            int n);

/// Percentile of |SNR_analytic - SNR_simulated| over matched
/// (scheme, N, P) rows of a both-engine result.
double engine_delta_percentile(const SweepResult& result, double percentile);

}  // namespace splitnlc::experiments
