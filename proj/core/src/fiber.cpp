#include <cmath>
#include <numbers>
#include <stdexcept>

#include "splitnlc/fft.hpp"
#include "splitnlc/fiber.hpp"
#include "splitnlc/rng.hpp"
#include "splitnlc/units.hpp"

namespace splitnlc::fiber {

double AmpParams::p_ase_w(double b_ref_hz) const {
  const double g = linear_from_db(gain_db);
  const double n_sp = linear_from_db(noise_figure_db) / 2.0;
  return 2.0 * n_sp * constants::photon_energy_j() * (g - 1.0) * b_ref_hz;
}

dsp::SampledWaveform edfa(const dsp::SampledWaveform& w, const AmpParams& amp,
                          std::uint64_t seed) {
  dsp::SampledWaveform out = w;
  const double amplitude = std::pow(10.0, amp.gain_db / 20.0);
  dsp::scale(out, amplitude);
  if (amp.noiseless) return out;

  // White ASE over the simulated band; p_ase_w is defined in a reference
  // bandwidth, so the per-sample variance scales with the spectral density.
  const double psd_per_pol =
      amp.p_ase_w(1.0) / 2.0;  // W/Hz in one polarization
  const double var = psd_per_pol * w.sample_rate_hz;
  CounterRng rng_x(seed, derive_stream("edfa", 0));
  CounterRng rng_y(seed, derive_stream("edfa", 1));
  for (auto& v : out.pol_x) v += rng_x.next_complex_gaussian(var);
  for (auto& v : out.pol_y) v += rng_y.next_complex_gaussian(var);
  return out;
}

std::pair<dsp::SampledWaveform, LinkTrace> propagate_link(
    const dsp::SampledWaveform& w, int num_spans, const FiberParams& fiber,
    const AmpParams& amp, const SsfConfig& cfg, std::uint64_t seed) {
  if (num_spans < 0) throw std::invalid_argument("negative span count");
  SsfConfig fwd = cfg;
  fwd.direction = Direction::Forward;

  dsp::SampledWaveform field = w;
  LinkTrace trace;
  trace.spans.reserve(num_spans);
  const double ase_full_band =
      amp.noiseless ? 0.0 : amp.p_ase_w(w.sample_rate_hz);
  for (int span = 0; span < num_spans; ++span) {
    field = ssf_span(field, fiber, fwd);
    SpanRecord rec;
    rec.pre_amp_power_w = dsp::mean_power(field);
    field = edfa(field, amp, CounterRng::mix(seed) + static_cast<std::uint64_t>(span));
    rec.post_amp_power_w = dsp::mean_power(field);
    rec.ase_power_w = ase_full_band;
    trace.spans.push_back(rec);
  }
  return {std::move(field), std::move(trace)};
}

dsp::SampledWaveform virtual_link(const dsp::SampledWaveform& w, int spans,
                                  const FiberParams& fiber, const SsfConfig& cfg) {
  if (spans < 0) throw std::invalid_argument("negative span count");
  SsfConfig inv = cfg;
  inv.direction = Direction::Inverse;
  const double undo_gain = std::pow(10.0, -fiber.span_loss_db() / 20.0);

  dsp::SampledWaveform field = w;
  for (int span = 0; span < spans; ++span) {
    dsp::scale(field, undo_gain);
    field = ssf_span(field, fiber, inv);
  }
  return field;
}

dsp::SampledWaveform edc_compensate(const dsp::SampledWaveform& w,
                                    const FiberParams& fiber, int num_spans) {
  dsp::SampledWaveform out = w;
  const std::size_t n = out.size();
  if (n == 0 || num_spans == 0) return out;
  const double b2l = fiber.beta2_s2_per_km() * fiber.length_km * num_spans;
  const double df = out.sample_rate_hz / static_cast<double>(n);
  Fft fft(n);
  fft.forward(out.pol_x.data());
  fft.forward(out.pol_y.data());
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double f =
        (k < (n + 1) / 2 ? static_cast<double>(k)
                         : static_cast<double>(k) - static_cast<double>(n)) * df;
    const double omega = 2.0 * std::numbers::pi * f;
    const auto h = std::polar(inv_n, -0.5 * b2l * omega * omega);
    out.pol_x[k] *= h;
    out.pol_y[k] *= h;
  }
  fft.backward(out.pol_x.data());
  fft.backward(out.pol_y.data());
  return out;
}

}  // namespace splitnlc::fiber
