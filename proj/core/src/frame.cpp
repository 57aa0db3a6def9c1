#include "splitnlc/frame.hpp"

#include <stdexcept>

#include "splitnlc/rng.hpp"

namespace splitnlc::dsp {

SymbolFrame generate_frame(std::uint64_t seed, std::size_t n_symbols,
                           const Constellation& constellation,
                           double symbol_rate_hz) {
  if (n_symbols < 1) throw std::invalid_argument("need at least one symbol");
  SymbolFrame f;
  f.symbol_rate_hz = symbol_rate_hz;
  f.pol_x.resize(n_symbols);
  f.pol_y.resize(n_symbols);
  const auto m = static_cast<std::uint64_t>(constellation.order);
  CounterRng rng_x(seed, derive_stream("frame/pol_x"));
  CounterRng rng_y(seed, derive_stream("frame/pol_y"));
  for (std::size_t i = 0; i < n_symbols; ++i) {
    f.pol_x[i] = constellation.points[rng_x.next_below(m)];
    f.pol_y[i] = constellation.points[rng_y.next_below(m)];
  }
  return f;
}

}  // namespace splitnlc::dsp
