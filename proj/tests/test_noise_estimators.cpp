#include <doctest.h>

#include <cmath>
#include <limits>

#include "splitnlc/estimators.hpp"
#include "splitnlc/rng.hpp"
#include "splitnlc/shaping.hpp"
#include "splitnlc/trx_noise.hpp"
#include "splitnlc/units.hpp"

using namespace splitnlc;
using namespace splitnlc::dsp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct BackToBack {
  SymbolFrame tx;
  SymbolFrame rx;
};

/// Transmit one channel through the transceiver-noise pair only.
BackToBack back_to_back(double snr_trx, double kappa_r, std::size_t n_sym,
                        std::uint64_t seed) {
  const auto c = qam_constellation(16);
  const auto frame = generate_frame(seed, n_sym, c, 32e9);
  auto w = shape_and_mux({frame}, 32e9, 3);
  w = add_trx_noise(w, snr_trx, kappa_r, NoiseSide::Tx, seed + 1);
  w = add_trx_noise(w, snr_trx, kappa_r, NoiseSide::Rx, seed + 2);
  return {frame, align_least_squares(frame, matched_filter_demux(w, 0))};
}

// Statistical std of the estimated SNR in dB for n pooled noise samples.
double snr_db_std(std::size_t n_per_pol) {
  return 10.0 / std::log(10.0) / std::sqrt(2.0 * static_cast<double>(n_per_pol));
}

}  // namespace

TEST_CASE("snr_estimate basics") {
  const auto c = qam_constellation(16);
  const auto tx = generate_frame(3, 1024, c, 32e9);

  SUBCASE("identical frames give the infinite sentinel") {
    CHECK(std::isinf(snr_estimate(tx, tx)));
  }
  SUBCASE("an all-zero receive gives unit ratio") {
    SymbolFrame rx = tx;
    for (auto& v : rx.pol_x) v = 0.0;
    for (auto& v : rx.pol_y) v = 0.0;
    CHECK(snr_estimate(tx, rx) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("mismatched lengths are rejected") {
    SymbolFrame rx = tx;
    rx.pol_x.pop_back();
    rx.pol_y.pop_back();
    CHECK_THROWS_AS(snr_estimate(tx, rx), std::invalid_argument);
  }
}

TEST_CASE("snr_estimate recovers synthetic AWGN levels") {
  const auto c = qam_constellation(16);
  for (std::size_t n : {std::size_t{1} << 12, std::size_t{1} << 16}) {
    const auto tx = generate_frame(17, n, c, 32e9);
    SymbolFrame rx = tx;
    const double snr_db = 20.0;
    const double sigma2 = linear_from_db(-snr_db);
    CounterRng gx(55, derive_stream("test/awgn", 0));
    CounterRng gy(55, derive_stream("test/awgn", 1));
    for (auto& v : rx.pol_x) v += gx.next_complex_gaussian(sigma2);
    for (auto& v : rx.pol_y) v += gy.next_complex_gaussian(sigma2);
    const double est = db_from_linear(snr_estimate(tx, rx));
    CHECK(std::abs(est - snr_db) <= 3.0 * snr_db_std(n));
    if (n == (std::size_t{1} << 16)) CHECK(std::abs(est - snr_db) <= 0.1);
  }
}

TEST_CASE("transceiver noise scaling") {
  SUBCASE("infinite budget leaves the waveform untouched") {
    const auto c = qam_constellation(16);
    const auto frame = generate_frame(5, 256, c, 32e9);
    const auto w = shape_and_mux({frame}, 32e9, 3);
    const auto w2 = add_trx_noise(w, kInf, 0.5, NoiseSide::Tx, 9);
    CHECK(w.pol_x == w2.pol_x);
    CHECK(w.pol_y == w2.pol_y);
  }

  SUBCASE("balanced split recovers the total budget back-to-back") {
    const std::size_t n = 1 << 16;
    const auto r = back_to_back(linear_from_db(26.0), 0.5, n, 21);
    CHECK(db_from_linear(snr_estimate(r.tx, r.rx)) == doctest::Approx(26.0).epsilon(0.002));
  }

  SUBCASE("transmitter-only share hits the transmitter budget") {
    // kappa_r = 0.8: the transmitter injects 20% of the budget, i.e. its own
    // ceiling sits 10*log10(1/0.2) ~ 6.99 dB above the total.
    const std::size_t n = 1 << 16;
    const auto c = qam_constellation(16);
    const auto frame = generate_frame(31, n, c, 32e9);
    auto w = shape_and_mux({frame}, 32e9, 3);
    w = add_trx_noise(w, linear_from_db(26.0), 0.8, NoiseSide::Tx, 77);
    const auto rx = align_least_squares(frame, matched_filter_demux(w, 0));
    const double est = db_from_linear(snr_estimate(frame, rx));
    CHECK(est == doctest::Approx(26.0 + 10.0 * std::log10(1.0 / 0.2)).epsilon(0.004));
  }

  SUBCASE("noise accounting holds across the share sweep") {
    const std::size_t n = 1 << 16;
    int idx = 0;
    for (double kr : {0.0, 0.2, 0.5, 0.8, 1.0}) {
      const auto r = back_to_back(linear_from_db(26.0), kr, n, 100 + idx++);
      const double est = db_from_linear(snr_estimate(r.tx, r.rx));
      CHECK(std::abs(est - 26.0) <= 0.05);
    }
  }
}
