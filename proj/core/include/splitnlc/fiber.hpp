#pragma once

#include <cstdint>
#include <vector>

#include "splitnlc/waveform.hpp"

namespace splitnlc::fiber {

/// Single-span fiber description.
struct FiberParams {
  double alpha_db_per_km = 0.2;
  double dispersion_ps_nm_km = 17.0;
  double gamma_1_w_km = 1.2;
  double length_km = 80.0;

  /// Power attenuation coefficient, 1/km.
  double alpha_linear_per_km() const;
  /// Group-velocity dispersion at the reference wavelength, s^2/km.
  double beta2_s2_per_km() const;
  /// Span power loss, dB.
  double span_loss_db() const { return alpha_db_per_km * length_km; }
};

/// Lumped amplifier following each span.
struct AmpParams {
  double gain_db = 16.0;
  double noise_figure_db = 4.0;
  bool noiseless = false;

  static AmpParams for_span_loss(const FiberParams& fiber,
                                 double noise_figure_db = 4.0) {
    return {fiber.span_loss_db(), noise_figure_db, false};
  }

  /// Amplifier noise power within `b_ref_hz`, both polarizations, W.
  /// Uses the high-gain inversion-factor convention n_sp = NF/2 (linear).
  double p_ase_w(double b_ref_hz) const;
};

enum class StepDistribution { Logarithmic, Uniform };
enum class Direction { Forward, Inverse };

/// Split-step integration controls.
struct SsfConfig {
  int steps_per_span = 100;
  StepDistribution distribution = StepDistribution::Logarithmic;
  Direction direction = Direction::Forward;
  /// Width of each monitored band edge as a fraction of the sampled band.
  double band_edge_fraction = 0.025;
  /// Error threshold: fraction of total power allowed at the band edges.
  double band_edge_power_limit = 0.05;
  bool check_band_edge = true;
};

/// Per-span propagation record.
struct SpanRecord {
  double pre_amp_power_w = 0.0;
  double post_amp_power_w = 0.0;
  double ase_power_w = 0.0;  ///< injected over the full simulated band
};

struct LinkTrace {
  std::vector<SpanRecord> spans;
};

/// Step boundaries within one span for the given distribution; logarithmic
/// spacing equalizes per-step effective length so the nonlinear rotation per
/// step stays roughly constant along the decaying power profile.
std::vector<double> step_sizes_km(const FiberParams& fiber, const SsfConfig& cfg);

/// Propagates one span with the symmetric split-step scheme on the Manakov
/// polarization-averaged nonlinearity (8/9 * gamma * total power).
/// Direction::Inverse runs the mirrored steps with negated dispersion and
/// nonlinearity and loss turned into gain. Throws std::runtime_error when the
/// band-edge monitor detects spectral energy reaching the grid boundary.
dsp::SampledWaveform ssf_span(const dsp::SampledWaveform& w,
                              const FiberParams& fiber, const SsfConfig& cfg);

/// Flat-gain amplifier with white circular ASE per polarization.
dsp::SampledWaveform edfa(const dsp::SampledWaveform& w, const AmpParams& amp,
                          std::uint64_t seed);

/// N spans of (fiber, amplifier), recording the per-span trace.
std::pair<dsp::SampledWaveform, LinkTrace> propagate_link(
    const dsp::SampledWaveform& w, int num_spans, const FiberParams& fiber,
    const AmpParams& amp, const SsfConfig& cfg, std::uint64_t seed);

/// Noiseless inverse propagation over `spans` spans applied to the full WDM
/// field: each virtual span removes the amplifier gain (taken as the span
/// loss) and runs the inverse split-step sweep, mirroring the physical power
/// profile.
dsp::SampledWaveform virtual_link(const dsp::SampledWaveform& w, int spans,
                                  const FiberParams& fiber, const SsfConfig& cfg);

/// Ideal electronic dispersion compensation for `num_spans` spans (linear
/// phase-only inverse, no power change).
dsp::SampledWaveform edc_compensate(const dsp::SampledWaveform& w,
                                    const FiberParams& fiber, int num_spans);

}  // namespace splitnlc::fiber
