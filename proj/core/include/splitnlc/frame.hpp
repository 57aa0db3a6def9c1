#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "splitnlc/constellation.hpp"

namespace splitnlc::dsp {

/// Dual-polarization block of modulation symbols.
struct SymbolFrame {
  std::vector<std::complex<double>> pol_x;
  std::vector<std::complex<double>> pol_y;
  double symbol_rate_hz = 0.0;

  std::size_t size() const { return pol_x.size(); }
};

/// Uniform i.i.d. symbol draws per polarization from the counter-based
/// generator; identical (seed, n, constellation) give bit-identical frames.
SymbolFrame generate_frame(std::uint64_t seed, std::size_t n_symbols,
                           const Constellation& constellation,
                           double symbol_rate_hz);

}  // namespace splitnlc::dsp
