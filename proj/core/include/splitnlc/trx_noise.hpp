#pragma once

#include <cstdint>

#include "splitnlc/waveform.hpp"

namespace splitnlc::dsp {

enum class NoiseSide { Tx, Rx };

/// Injects the transceiver-noise share of one side as circular white Gaussian
/// noise over the full simulated band, scaled so the post-matched-filter
/// per-symbol SNR of each channel hits the side's target
/// (snr_trx / (1 - kappa_r) at the transmitter, snr_trx / kappa_r at the
/// receiver). A side whose share is zero, or an infinite transceiver SNR,
/// leaves the waveform unchanged.
SampledWaveform add_trx_noise(const SampledWaveform& w, double snr_trx,
                              double kappa_r, NoiseSide side,
                              std::uint64_t seed);

}  // namespace splitnlc::dsp
