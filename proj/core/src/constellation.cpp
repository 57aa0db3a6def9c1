#include "splitnlc/constellation.hpp"

#include <cmath>
#include <stdexcept>

namespace splitnlc::dsp {
namespace {

unsigned gray_encode(unsigned v) { return v ^ (v >> 1); }

// Position of gray code `g` along the amplitude axis, i.e. the rank whose
// gray encoding equals g.
unsigned gray_rank(unsigned g) {
  unsigned r = 0;
  for (; g; g >>= 1) r ^= g;
  return r;
}

}  // namespace

Constellation qam_constellation(int order) {
  if (order != 4 && order != 16 && order != 64 && order != 256)
    throw std::invalid_argument("supported QAM orders are 4, 16, 64, 256");

  const int side = static_cast<int>(std::lround(std::sqrt(order)));
  const int bits_per_axis = static_cast<int>(std::lround(std::log2(side)));

  // E|p|^2 of the unnormalized grid {..,-3,-1,1,3,..}^2 is 2(order-1)/3.
  const double scale = std::sqrt(3.0 / (2.0 * (order - 1)));

  Constellation c;
  c.order = order;
  c.points.resize(order);
  for (int idx = 0; idx < order; ++idx) {
    const unsigned hi = static_cast<unsigned>(idx) >> bits_per_axis;
    const unsigned lo = static_cast<unsigned>(idx) & (side - 1);
    const int i_level = 2 * static_cast<int>(gray_rank(hi)) - (side - 1);
    const int q_level = 2 * static_cast<int>(gray_rank(lo)) - (side - 1);
    c.points[idx] = scale * std::complex<double>(i_level, q_level);
  }
  return c;
}

}  // namespace splitnlc::dsp
