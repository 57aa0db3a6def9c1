#pragma once

#include <vector>

#include "splitnlc/frame.hpp"
#include "splitnlc/waveform.hpp"

namespace splitnlc::dsp {

/// Pulse-shapes each channel with a zero-roll-off Nyquist filter (exact
/// frequency-domain brick wall over the cyclic block), shifts it onto the
/// centered WDM grid and sums. All frames must share length and symbol rate;
/// the aggregate sample rate is oversampling * num_channels * spacing and
/// must be an integer multiple of the symbol rate. Throws std::invalid_argument
/// when the occupied band does not fit.
SampledWaveform shape_and_mux(const std::vector<SymbolFrame>& frames,
                              double spacing_hz, int oversampling);

/// Matched filter for one channel: shift to baseband, brick-wall select,
/// symbol-rate decimation on the cyclic block. The output is unnormalized
/// apart from the deterministic filter gain; use align_least_squares against
/// the transmitted frame before computing error metrics.
SymbolFrame matched_filter_demux(const SampledWaveform& w, int channel_index);

/// Applies the single complex least-squares scalar that best maps rx onto tx
/// (joint over both polarizations), compensating deterministic scaling and
/// common phase.
SymbolFrame align_least_squares(const SymbolFrame& tx, const SymbolFrame& rx);

}  // namespace splitnlc::dsp
