#pragma once

#include <cstdint>
#include <optional>

#include "splitnlc/analytic.hpp"
#include "splitnlc/fiber.hpp"
#include "splitnlc/frame.hpp"
#include "splitnlc/shaping.hpp"

namespace splitnlc::fiber {

/// One end-to-end waveform experiment: generation, shaping, split
/// compensation, propagation and matched-filter reception.
struct ChainScenario {
  int num_spans = 10;
  analytic::Scheme scheme = analytic::Scheme::dbp();
  double launch_power_w = 1e-3;  ///< per channel, both polarizations

  FiberParams fiber;
  AmpParams amp = AmpParams::for_span_loss(FiberParams{});
  SsfConfig ssf;

  double snr_trx = 0.0;  ///< linear; infinity disables transceiver noise
  double kappa_r = 0.5;

  int num_channels = 3;
  double symbol_rate_hz = 32e9;
  double channel_spacing_hz = 32e9;
  int oversampling = 3;
  std::size_t n_symbols = 4096;
  int modulation_order = 256;
  int measured_channel = -1;  ///< -1 = center channel

  std::uint64_t seed = 1;
  /// Sensitivity switch: inject the transmitter noise share before the
  /// transmitter-side virtual link instead of after it.
  bool tx_noise_before_precomp = false;
};

struct ChainResult {
  dsp::SymbolFrame tx;
  dsp::SymbolFrame rx;  ///< least-squares aligned to tx
};

/// Runs the split-compensation chain: pre-compensation of X spans, the
/// transmitter noise share, the physical link, the receiver noise share,
/// back-propagation of the remaining spans (or plain dispersion compensation
/// for the EDC scheme) and the matched filter on the measured channel.
ChainResult run_split_nlc_chain(const ChainScenario& scenario);

}  // namespace splitnlc::fiber
