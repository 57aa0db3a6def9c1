#include "splitnlc/chain.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "splitnlc/rng.hpp"
#include "splitnlc/trx_noise.hpp"

namespace splitnlc::fiber {
namespace {

int resolve_chain_split(const ChainScenario& s) {
  using analytic::Scheme;
  switch (s.scheme.kind) {
    case Scheme::Kind::Edc:
    case Scheme::Kind::Dbp: return 0;
    case Scheme::Kind::Dpc: return s.num_spans;
    case Scheme::Kind::HalfSplit: return (s.num_spans + 1) / 2;
    case Scheme::Kind::FixedSplit:
      if (s.scheme.x_fixed < 0 || s.scheme.x_fixed > s.num_spans)
        throw std::domain_error("fixed split outside [0, num_spans]");
      return s.scheme.x_fixed;
    case Scheme::Kind::OptimalSplit:
      throw std::invalid_argument(
          "resolve the optimal split analytically before simulating");
  }
  return 0;
}

}  // namespace

ChainResult run_split_nlc_chain(const ChainScenario& s) {
  const int x = resolve_chain_split(s);
  const auto constellation = dsp::qam_constellation(s.modulation_order);

  std::vector<dsp::SymbolFrame> frames;
  frames.reserve(s.num_channels);
  for (int ch = 0; ch < s.num_channels; ++ch) {
    frames.push_back(dsp::generate_frame(
        CounterRng::mix(s.seed ^ derive_stream("chain/frame", ch)), s.n_symbols,
        constellation, s.symbol_rate_hz));
  }
  auto w = dsp::shape_and_mux(frames, s.channel_spacing_hz, s.oversampling);
  // Unit constellation power per polarization; set per-channel launch power.
  dsp::scale(w, std::sqrt(s.launch_power_w / 2.0));

  const std::uint64_t tx_seed = CounterRng::mix(s.seed ^ derive_stream("chain/trx-tx"));
  const std::uint64_t rx_seed = CounterRng::mix(s.seed ^ derive_stream("chain/trx-rx"));
  const std::uint64_t link_seed = CounterRng::mix(s.seed ^ derive_stream("chain/link"));

  const bool edc = s.scheme.kind == analytic::Scheme::Kind::Edc;

  if (s.tx_noise_before_precomp)
    w = dsp::add_trx_noise(w, s.snr_trx, s.kappa_r, dsp::NoiseSide::Tx, tx_seed);
  if (!edc && x > 0) w = virtual_link(w, x, s.fiber, s.ssf);
  if (!s.tx_noise_before_precomp)
    w = dsp::add_trx_noise(w, s.snr_trx, s.kappa_r, dsp::NoiseSide::Tx, tx_seed);

  auto [field, trace] = propagate_link(w, s.num_spans, s.fiber, s.amp, s.ssf, link_seed);

  field = dsp::add_trx_noise(field, s.snr_trx, s.kappa_r, dsp::NoiseSide::Rx, rx_seed);

  if (edc) {
    field = edc_compensate(field, s.fiber, s.num_spans);
  } else if (s.num_spans - x > 0) {
    field = virtual_link(field, s.num_spans - x, s.fiber, s.ssf);
  }

  const int measured =
      s.measured_channel >= 0 ? s.measured_channel : s.num_channels / 2;
  ChainResult result;
  result.tx = frames.at(measured);
  auto rx_raw = dsp::matched_filter_demux(field, measured);
  result.rx = dsp::align_least_squares(result.tx, rx_raw);
  return result;
}

}  // namespace splitnlc::fiber
