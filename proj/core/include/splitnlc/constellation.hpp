#pragma once

#include <complex>
#include <vector>

namespace splitnlc::dsp {

/// Square QAM constellation normalized to unit average power.
///
/// Point ordering is deterministic: the symbol index splits into two
/// log2(sqrt(order))-bit halves, the high half selecting the in-phase level
/// and the low half the quadrature level, each through a binary-reflected
/// Gray code. Adjacent levels along either axis therefore differ in exactly
/// one bit of the corresponding half.
struct Constellation {
  int order = 0;
  std::vector<std::complex<double>> points;
};

/// Builds the constellation for order in {4, 16, 64, 256}; throws
/// std::invalid_argument otherwise.
Constellation qam_constellation(int order);

}  // namespace splitnlc::dsp
