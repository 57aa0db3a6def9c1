#include "splitnlc/estimators.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "splitnlc/rng.hpp"

namespace splitnlc::dsp {
namespace {

double mean_norm(const std::vector<std::complex<double>>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s / static_cast<double>(v.size());
}

double error_power(const std::vector<std::complex<double>>& a,
                   const std::vector<std::complex<double>>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return s / static_cast<double>(a.size());
}

// Per-polarization Monte-Carlo information density, averaged over the frame.
struct PolMi {
  double mean;
  double var;  // sample variance of the information density
};

PolMi pol_mi(const std::vector<std::complex<double>>& tx,
             const std::vector<std::complex<double>>& rx,
             const Constellation& c) {
  const std::size_t n = tx.size();
  const double sigma2 = error_power(tx, rx);
  const double log2_m = std::log2(static_cast<double>(c.order));
  if (sigma2 <= 0.0) return {log2_m, 0.0};

  const double inv_s2 = 1.0 / sigma2;
  const double log_m = std::log(static_cast<double>(c.order));
  double sum = 0.0, sum2 = 0.0;
  std::vector<double> neg_d2(c.points.size());
  for (std::size_t i = 0; i < n; ++i) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      neg_d2[k] = -std::norm(rx[i] - c.points[k]) * inv_s2;
      mx = std::max(mx, neg_d2[k]);
    }
    double acc = 0.0;
    for (double v : neg_d2) acc += std::exp(v - mx);
    const double log_py = mx + std::log(acc) - log_m;  // up to the common Gaussian norm
    const double log_pyx = -std::norm(rx[i] - tx[i]) * inv_s2;
    const double info = (log_pyx - log_py) / std::numbers::ln2;
    sum += info;
    sum2 += info * info;
  }
  const double mean = sum / static_cast<double>(n);
  const double var = std::max(0.0, sum2 / static_cast<double>(n) - mean * mean);
  return {mean, var};
}

}  // namespace

double snr_estimate(const SymbolFrame& tx, const SymbolFrame& rx) {
  if (tx.size() != rx.size() || tx.size() == 0)
    throw std::invalid_argument("frames must have equal nonzero length");
  const double sig =
      0.5 * (mean_norm(tx.pol_x) + mean_norm(tx.pol_y));
  const double err =
      0.5 * (error_power(tx.pol_x, rx.pol_x) + error_power(tx.pol_y, rx.pol_y));
  if (err <= 0.0) return std::numeric_limits<double>::infinity();
  return sig / err;
}

double evm_db(const SymbolFrame& tx, const SymbolFrame& rx) {
  const double snr = snr_estimate(tx, rx);
  return std::isinf(snr) ? -std::numeric_limits<double>::infinity()
                         : -10.0 * std::log10(snr);
}

MiEstimate mi_monte_carlo(const SymbolFrame& tx, const SymbolFrame& rx,
                          const Constellation& constellation) {
  if (tx.size() != rx.size() || tx.size() == 0)
    throw std::invalid_argument("frames must have equal nonzero length");
  const auto n = tx.size();
  const PolMi x = pol_mi(tx.pol_x, rx.pol_x, constellation);
  const PolMi y = pol_mi(tx.pol_y, rx.pol_y, constellation);

  MiEstimate e;
  e.mi_pol_x = x.mean;
  e.mi_pol_y = y.mean;
  e.mi = 0.5 * (x.mean + y.mean);
  e.std_error = 0.5 * std::sqrt((x.var + y.var) / static_cast<double>(n));
  e.samples_used = 2 * n;
  return e;
}

MiEstimate mi_for_awgn_snr(double snr_linear, const Constellation& constellation,
                           std::size_t n_symbols, std::uint64_t seed) {
  if (!(snr_linear > 0.0)) throw std::domain_error("snr must be positive");
  SymbolFrame tx = generate_frame(seed, n_symbols, constellation, 0.0);
  SymbolFrame rx = tx;
  const double sigma2 = 1.0 / snr_linear;
  CounterRng rng_x(seed, derive_stream("mi/awgn", 0));
  CounterRng rng_y(seed, derive_stream("mi/awgn", 1));
  for (auto& v : rx.pol_x) v += rng_x.next_complex_gaussian(sigma2);
  for (auto& v : rx.pol_y) v += rng_y.next_complex_gaussian(sigma2);
  return mi_monte_carlo(tx, rx, constellation);
}

}  // namespace splitnlc::dsp
