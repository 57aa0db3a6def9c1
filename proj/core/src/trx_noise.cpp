#include "splitnlc/trx_noise.hpp"

#include <cmath>
#include <stdexcept>

#include "splitnlc/rng.hpp"

namespace splitnlc::dsp {

SampledWaveform add_trx_noise(const SampledWaveform& w, double snr_trx,
                              double kappa_r, NoiseSide side,
                              std::uint64_t seed) {
  const double share = side == NoiseSide::Tx ? 1.0 - kappa_r : kappa_r;
  if (share <= 0.0 || std::isinf(snr_trx)) return w;
  if (!(snr_trx > 0.0)) throw std::domain_error("snr_trx must be positive");
  if (w.num_channels() == 0 || w.symbol_rate_hz <= 0.0)
    throw std::invalid_argument("waveform lacks channel metadata");

  const double p_channel =
      mean_power(w) / static_cast<double>(w.num_channels());
  // In-band noise per channel (both polarizations) for this side's SNR
  // budget, spread white over the simulated band.
  const double in_band_w = p_channel * share / snr_trx;
  const double var_per_pol =
      in_band_w / 2.0 * (w.sample_rate_hz / w.symbol_rate_hz);

  SampledWaveform out = w;
  const char* label = side == NoiseSide::Tx ? "trx/tx" : "trx/rx";
  CounterRng rng_x(seed, derive_stream(label, 0));
  CounterRng rng_y(seed, derive_stream(label, 1));
  for (auto& v : out.pol_x) v += rng_x.next_complex_gaussian(var_per_pol);
  for (auto& v : out.pol_y) v += rng_y.next_complex_gaussian(var_per_pol);
  return out;
}

}  // namespace splitnlc::dsp
