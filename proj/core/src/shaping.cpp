#include "splitnlc/shaping.hpp"

#include <cmath>
#include <stdexcept>

#include "splitnlc/fft.hpp"

namespace splitnlc::dsp {
namespace {

long offset_bins(double offset_hz, double bin_hz) {
  const double bins = offset_hz / bin_hz;
  const long rounded = std::lround(bins);
  if (std::abs(bins - rounded) > 1e-6)
    throw std::invalid_argument(
        "channel offset does not fall on the cyclic frequency grid");
  return rounded;
}

}  // namespace

SampledWaveform shape_and_mux(const std::vector<SymbolFrame>& frames,
                              double spacing_hz, int oversampling) {
  if (frames.empty()) throw std::invalid_argument("no channels");
  const std::size_t n_sym = frames[0].size();
  const double rs = frames[0].symbol_rate_hz;
  for (const auto& f : frames) {
    if (f.size() != n_sym || f.symbol_rate_hz != rs)
      throw std::invalid_argument("channel frames must share length and rate");
  }
  if (n_sym < 2) throw std::invalid_argument("frames too short");
  if (spacing_hz < rs)
    throw std::invalid_argument("channel spacing below the symbol rate");

  const auto n_ch = static_cast<int>(frames.size());
  const double fs = static_cast<double>(oversampling) * n_ch * spacing_hz;
  const double upsample = fs / rs;
  const auto u = static_cast<std::size_t>(std::lround(upsample));
  if (std::abs(upsample - static_cast<double>(u)) > 1e-9 || u < 1)
    throw std::invalid_argument(
        "sample rate must be an integer multiple of the symbol rate");

  SampledWaveform w;
  w.sample_rate_hz = fs;
  w.symbol_rate_hz = rs;
  const std::size_t n = u * n_sym;
  w.pol_x.assign(n, 0.0);
  w.pol_y.assign(n, 0.0);

  // Occupied band must stay inside the sampled band.
  const double half_grid = (n_ch - 1) / 2.0;
  if ((half_grid * spacing_hz + rs / 2.0) * 2.0 > fs)
    throw std::invalid_argument("aggregate bandwidth exceeds the sample rate");

  const double bin_hz = fs / static_cast<double>(n);
  Fft fft_sym(n_sym);
  Fft fft_agg(n);

  std::vector<std::complex<double>> spec(n_sym);
  std::vector<std::complex<double>> agg_x(n, 0.0), agg_y(n, 0.0);
  for (int ch = 0; ch < n_ch; ++ch) {
    const double offset = (ch - half_grid) * spacing_hz;
    w.center_frequencies_hz.push_back(offset);
    const long off = offset_bins(offset, bin_hz);
    for (int pol = 0; pol < 2; ++pol) {
      const auto& sym = pol == 0 ? frames[ch].pol_x : frames[ch].pol_y;
      auto& agg = pol == 0 ? agg_x : agg_y;
      std::copy(sym.begin(), sym.end(), spec.begin());
      fft_sym.forward(spec.data());
      const auto half = static_cast<long>(n_sym) / 2;
      for (long k = 0; k < static_cast<long>(n_sym); ++k) {
        const long j = k - half;  // symbol-spectrum frequency index
        const std::size_t src = static_cast<std::size_t>((j + n_sym) % n_sym);
        const std::size_t dst =
            static_cast<std::size_t>(((off + j) % static_cast<long>(n) + n) % n);
        // Gain u keeps sample values equal to the symbols at symbol instants.
        agg[dst] += spec[src] * static_cast<double>(u);
      }
    }
  }
  fft_agg.backward(agg_x.data());
  fft_agg.backward(agg_y.data());
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.pol_x[i] = agg_x[i] * inv_n;
    w.pol_y[i] = agg_y[i] * inv_n;
  }
  return w;
}

SymbolFrame matched_filter_demux(const SampledWaveform& w, int channel_index) {
  if (channel_index < 0 ||
      static_cast<std::size_t>(channel_index) >= w.num_channels())
    throw std::invalid_argument("channel index out of range");
  const std::size_t n = w.size();
  const double rs = w.symbol_rate_hz;
  const auto u = static_cast<std::size_t>(std::lround(w.sample_rate_hz / rs));
  const std::size_t n_sym = n / u;

  const double bin_hz = w.sample_rate_hz / static_cast<double>(n);
  const long off = offset_bins(w.center_frequencies_hz[channel_index], bin_hz);

  SymbolFrame out;
  out.symbol_rate_hz = rs;
  Fft fft_agg(n);
  Fft fft_sym(n_sym);
  std::vector<std::complex<double>> agg(n);
  std::vector<std::complex<double>> spec(n_sym);
  for (int pol = 0; pol < 2; ++pol) {
    const auto& smp = pol == 0 ? w.pol_x : w.pol_y;
    std::copy(smp.begin(), smp.end(), agg.begin());
    fft_agg.forward(agg.data());
    const auto half = static_cast<long>(n_sym) / 2;
    for (long k = 0; k < static_cast<long>(n_sym); ++k) {
      const long j = k - half;
      const std::size_t dst = static_cast<std::size_t>((j + n_sym) % n_sym);
      const std::size_t src =
          static_cast<std::size_t>(((off + j) % static_cast<long>(n) + n) % n);
      spec[dst] = agg[src] / static_cast<double>(u);
    }
    fft_sym.backward(spec.data());
    auto& sym = pol == 0 ? out.pol_x : out.pol_y;
    sym.resize(n_sym);
    const double inv = 1.0 / static_cast<double>(n_sym);
    for (std::size_t i = 0; i < n_sym; ++i) sym[i] = spec[i] * inv;
  }
  return out;
}

SymbolFrame align_least_squares(const SymbolFrame& tx, const SymbolFrame& rx) {
  if (tx.size() != rx.size())
    throw std::invalid_argument("frame lengths differ");
  std::complex<double> num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    num += std::conj(rx.pol_x[i]) * tx.pol_x[i] + std::conj(rx.pol_y[i]) * tx.pol_y[i];
    den += std::norm(rx.pol_x[i]) + std::norm(rx.pol_y[i]);
  }
  const std::complex<double> a = den > 0.0 ? num / den : 1.0;
  SymbolFrame out = rx;
  for (auto& v : out.pol_x) v *= a;
  for (auto& v : out.pol_y) v *= a;
  return out;
}

}  // namespace splitnlc::dsp
