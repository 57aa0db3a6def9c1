#pragma once

#include <complex>
#include <vector>

namespace splitnlc::dsp {

/// Dual-polarization complex baseband waveform on the aggregate WDM grid.
/// Field amplitudes are in sqrt(W), so |sample|^2 sums to instantaneous
/// power in watts across both polarizations.
struct SampledWaveform {
  std::vector<std::complex<double>> pol_x;
  std::vector<std::complex<double>> pol_y;
  double sample_rate_hz = 0.0;
  double symbol_rate_hz = 0.0;
  std::vector<double> center_frequencies_hz;  ///< one entry per channel

  std::size_t size() const { return pol_x.size(); }
  std::size_t num_channels() const { return center_frequencies_hz.size(); }
};

/// Mean power of one polarization, W.
inline double mean_power(const std::vector<std::complex<double>>& samples) {
  double s = 0.0;
  for (const auto& z : samples) s += std::norm(z);
  return samples.empty() ? 0.0 : s / static_cast<double>(samples.size());
}

/// Mean power over both polarizations, W.
inline double mean_power(const SampledWaveform& w) {
  return mean_power(w.pol_x) + mean_power(w.pol_y);
}

/// Scales both polarizations by a real amplitude factor.
inline void scale(SampledWaveform& w, double amplitude_factor) {
  for (auto& v : w.pol_x) v *= amplitude_factor;
  for (auto& v : w.pol_y) v *= amplitude_factor;
}

}  // namespace splitnlc::dsp
