#pragma once

#include <cstdint>

#include "splitnlc/constellation.hpp"
#include "splitnlc/frame.hpp"

namespace splitnlc::dsp {

/// E[|X|^2] / E[|X-Y|^2], pooled over both polarizations. Returns +infinity
/// when the error vector is exactly zero.
double snr_estimate(const SymbolFrame& tx, const SymbolFrame& rx);

/// Error vector magnitude in dB: 10*log10(E|X-Y|^2 / E|X|^2).
double evm_db(const SymbolFrame& tx, const SymbolFrame& rx);

/// Monte-Carlo mutual-information estimate.
struct MiEstimate {
  double mi = 0.0;         ///< bits/symbol per polarization (mean of the two)
  double mi_pol_x = 0.0;
  double mi_pol_y = 0.0;
  double std_error = 0.0;  ///< standard error of `mi`
  std::size_t samples_used = 0;
};

/// Mutual information between transmitted and received symbols under a
/// memoryless AWGN channel law whose noise variance is estimated per
/// polarization from (tx, rx). A zero noise variance returns log2(order)
/// exactly.
MiEstimate mi_monte_carlo(const SymbolFrame& tx, const SymbolFrame& rx,
                          const Constellation& constellation);

/// Convenience path used by the model-driven figures: synthesizes an AWGN
/// channel at the given linear SNR with `n_symbols` draws per polarization
/// and runs the Monte-Carlo estimator.
MiEstimate mi_for_awgn_snr(double snr_linear, const Constellation& constellation,
                           std::size_t n_symbols, std::uint64_t seed);

}  // namespace splitnlc::dsp
