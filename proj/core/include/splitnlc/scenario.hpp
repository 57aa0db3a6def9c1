#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitnlc/analytic.hpp"
#include "splitnlc/fiber.hpp"

namespace splitnlc::experiments {

/// Complete description of a study: link physics, model coefficients,
/// transceiver budget, DSP settings, sweep axes and engine selection.
/// Scenario files are JSON with explicit units in the key names; unknown
/// keys are rejected.
struct Scenario {
  std::string id = "scenario";

  // link
  double span_length_km = 80.0;
  double alpha_db_per_km = 0.2;
  double dispersion_ps_nm_km = 17.0;
  double gamma_1_w_km = 1.2;
  double noise_figure_db = 4.0;

  // model coefficients (scenario inputs, not derived here)
  double eta_db_1_w2 = 26.2;
  double epsilon = 0.108;

  // transceiver
  double snr_trx_db = 26.0;  ///< infinity = noiseless transceiver
  double kappa_r = 0.5;

  // dsp / waveform
  int num_channels = 3;
  double symbol_rate_gbd = 32.0;
  double channel_spacing_ghz = 32.0;
  int oversampling = 3;
  int modulation_order = 256;

  // simulation controls
  int steps_per_span = 100;
  std::string step_distribution = "logarithmic";
  std::uint64_t n_symbols = 4096;

  // sweep axes
  std::vector<int> span_counts;
  std::vector<std::string> schemes = {"edc", "dbp", "dpc", "half", "opt"};
  std::optional<double> power_dbm_min;
  std::optional<double> power_dbm_max;
  double power_dbm_step = 0.5;
  /// Width of the automatic grid around the analytic optimum when no
  /// explicit bounds are given.
  double auto_power_halfspan_db = 3.0;

  std::string engine = "analytic";  ///< analytic | simulation | both
  std::uint64_t seed = 42;
  bool mi_enabled = false;
  std::uint64_t mi_samples = 16384;

  // --- derived views -------------------------------------------------------
  double b_ref_hz() const { return symbol_rate_gbd * 1e9; }
  double snr_trx_linear() const;
  fiber::FiberParams fiber_params() const;
  fiber::AmpParams amp_params() const;
  analytic::LinkParams link_params(int num_spans) const;
  analytic::TrxParams trx_params() const;
  fiber::SsfConfig ssf_config() const;

  void validate() const;
  /// Canonical JSON serialization (stable key order).
  std::string to_json() const;
  /// Stable hash of the canonical serialization.
  std::string hash() const;
};

/// Parses a scenario from JSON text; unknown keys raise std::invalid_argument.
Scenario scenario_from_json_text(const std::string& text);

Scenario load_scenario(const std::string& path);

/// Applies one "key=value" override using the same keys as the file format.
void apply_override(Scenario& s, const std::string& key_value);

}  // namespace splitnlc::experiments
