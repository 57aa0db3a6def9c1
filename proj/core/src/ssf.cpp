#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "splitnlc/fft.hpp"
#include "splitnlc/fiber.hpp"
#include "splitnlc/units.hpp"

namespace splitnlc::fiber {

double FiberParams::alpha_linear_per_km() const {
  return alpha_db_per_km * std::numbers::ln10 / 10.0;
}

double FiberParams::beta2_s2_per_km() const {
  const double lam = constants::kReferenceWavelength_m;
  const double d_si = dispersion_ps_nm_km * 1e-6;  // s/m^2
  return -d_si * lam * lam / (2.0 * std::numbers::pi * constants::kLightSpeed_m_s) * 1e3;
}

std::vector<double> step_sizes_km(const FiberParams& fiber, const SsfConfig& cfg) {
  const int k = cfg.steps_per_span;
  if (k < 1) throw std::invalid_argument("steps_per_span must be >= 1");
  const double len = fiber.length_km;
  std::vector<double> sizes(k);
  if (cfg.distribution == StepDistribution::Uniform ||
      fiber.alpha_db_per_km <= 0.0) {
    for (auto& h : sizes) h = len / k;
    return sizes;
  }
  const double a = fiber.alpha_linear_per_km();
  const double depletion = 1.0 - std::exp(-a * len);
  double prev = 0.0;
  for (int i = 1; i <= k; ++i) {
    const double z =
        i == k ? len
               : -std::log(1.0 - depletion * static_cast<double>(i) / k) / a;
    sizes[i - 1] = z - prev;
    prev = z;
  }
  return sizes;
}

namespace {

// Frequency-domain linear propagators for every distinct step of a span
// sweep, with the inverse-FFT normalization folded in. One table per
// (grid, fiber, step plan, direction); shared read-only across threads.
struct PropagatorTable {
  std::vector<std::vector<std::complex<double>>> half_steps;  // size K+1
  std::vector<double> nl_phase_per_w;                         // size K
  std::vector<double> step_sizes_km;
};

using TableKey =
    std::tuple<std::size_t, double, int, int, int, double, double, double, double>;

std::vector<double> angular_freqs(std::size_t n, double sample_rate) {
  std::vector<double> w(n);
  const double df = sample_rate / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double f =
        (k < (n + 1) / 2 ? static_cast<double>(k)
                         : static_cast<double>(k) - static_cast<double>(n)) * df;
    w[k] = 2.0 * std::numbers::pi * f;
  }
  return w;
}

std::shared_ptr<const PropagatorTable> build_table(std::size_t n,
                                                   double sample_rate,
                                                   const FiberParams& fiber,
                                                   const SsfConfig& cfg) {
  auto table = std::make_shared<PropagatorTable>();
  auto sizes = step_sizes_km(fiber, cfg);
  const bool inverse = cfg.direction == Direction::Inverse;
  if (inverse) std::reverse(sizes.begin(), sizes.end());
  table->step_sizes_km = sizes;

  const double sgn = inverse ? -1.0 : 1.0;
  const double b2 = fiber.beta2_s2_per_km() * sgn;
  const double a = fiber.alpha_linear_per_km() * sgn;
  const double g = fiber.gamma_1_w_km * sgn;
  const double a_abs = fiber.alpha_linear_per_km();

  const auto k = static_cast<int>(sizes.size());
  const auto omega = angular_freqs(n, sample_rate);
  const double inv_n = 1.0 / static_cast<double>(n);

  // Merged symmetric sweep: boundary half-steps plus K-1 interior whole
  // steps built from adjacent halves.
  std::vector<double> lin_lengths(k + 1);
  lin_lengths[0] = sizes[0] / 2.0;
  for (int i = 1; i < k; ++i) lin_lengths[i] = (sizes[i - 1] + sizes[i]) / 2.0;
  lin_lengths[k] = sizes[k - 1] / 2.0;

  table->half_steps.resize(k + 1);
  for (int i = 0; i <= k; ++i) {
    const double h = lin_lengths[i];
    auto& row = table->half_steps[i];
    row.resize(n);
    const double gain = std::exp(-0.5 * a * h);
    for (std::size_t j = 0; j < n; ++j) {
      const double phase = 0.5 * b2 * omega[j] * omega[j] * h;
      row[j] = std::polar(gain * inv_n, phase);
    }
  }

  table->nl_phase_per_w.resize(k);
  for (int i = 0; i < k; ++i) {
    const double h = sizes[i];
    // Effective length of the step around its midpoint field.
    const double leff =
        a_abs > 0.0 ? 2.0 * std::sinh(0.5 * a_abs * h) / a_abs : h;
    table->nl_phase_per_w[i] = (8.0 / 9.0) * g * leff;
  }
  return table;
}

std::shared_ptr<const PropagatorTable> table_for(std::size_t n,
                                                 double sample_rate,
                                                 const FiberParams& fiber,
                                                 const SsfConfig& cfg) {
  constexpr std::size_t kCacheEntryLimitBytes = 512ull << 20;
  const std::size_t bytes =
      static_cast<std::size_t>(cfg.steps_per_span + 1) * n * sizeof(std::complex<double>);
  if (bytes > kCacheEntryLimitBytes) return build_table(n, sample_rate, fiber, cfg);

  static std::mutex mu;
  static std::map<TableKey, std::shared_ptr<const PropagatorTable>> cache;
  const TableKey key{n,
                     sample_rate,
                     cfg.steps_per_span,
                     static_cast<int>(cfg.distribution),
                     static_cast<int>(cfg.direction),
                     fiber.alpha_db_per_km,
                     fiber.dispersion_ps_nm_km,
                     fiber.gamma_1_w_km,
                     fiber.length_km};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto table = build_table(n, sample_rate, fiber, cfg);
  cache.emplace(key, table);
  return table;
}

void check_band_edges(const std::complex<double>* sx,
                      const std::complex<double>* sy, std::size_t n,
                      const SsfConfig& cfg) {
  // Spectra are in FFT order: indices around n/2 are the band edges.
  const auto guard = static_cast<std::size_t>(
      std::llround(cfg.band_edge_fraction * static_cast<double>(n)));
  if (guard == 0) return;
  double edge = 0.0, total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += std::norm(sx[i]) + std::norm(sy[i]);
  for (std::size_t i = n / 2 - guard; i < n / 2 + guard; ++i)
    edge += std::norm(sx[i]) + std::norm(sy[i]);
  if (total > 0.0 && edge > cfg.band_edge_power_limit * total)
    throw std::runtime_error(
        "sample-rate underrun: spectral energy at the band edge exceeds " +
        std::to_string(cfg.band_edge_power_limit * 100.0) + "% of total power");
}

void apply_filter(std::complex<double>* data, const std::complex<double>* h,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) data[i] *= h[i];
}

}  // namespace

dsp::SampledWaveform ssf_span(const dsp::SampledWaveform& w,
                              const FiberParams& fiber, const SsfConfig& cfg) {
  if (w.size() == 0) throw std::invalid_argument("empty waveform");
  const std::size_t n = w.size();
  const auto table = table_for(n, w.sample_rate_hz, fiber, cfg);
  Fft fft(n);

  dsp::SampledWaveform out = w;
  auto* ux = out.pol_x.data();
  auto* uy = out.pol_y.data();

  fft.forward(ux);
  fft.forward(uy);
  if (cfg.check_band_edge) check_band_edges(ux, uy, n, cfg);
  apply_filter(ux, table->half_steps[0].data(), n);
  apply_filter(uy, table->half_steps[0].data(), n);
  fft.backward(ux);
  fft.backward(uy);

  const auto k = static_cast<int>(table->nl_phase_per_w.size());
  for (int step = 0; step < k; ++step) {
    const double c = table->nl_phase_per_w[step];
    for (std::size_t i = 0; i < n; ++i) {
      const double p = std::norm(ux[i]) + std::norm(uy[i]);
      const double phi = c * p;
      const std::complex<double> rot{std::cos(phi), std::sin(phi)};
      ux[i] *= rot;
      uy[i] *= rot;
    }
    const auto& lin = table->half_steps[step + 1];
    fft.forward(ux);
    fft.forward(uy);
    apply_filter(ux, lin.data(), n);
    apply_filter(uy, lin.data(), n);
    fft.backward(ux);
    fft.backward(uy);
  }
  return out;
}

}  // namespace splitnlc::fiber
