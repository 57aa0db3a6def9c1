#include <doctest.h>

#include <cmath>
#include <vector>

#include "splitnlc/estimators.hpp"
#include "splitnlc/units.hpp"

using namespace splitnlc;
using namespace splitnlc::dsp;

namespace {

/// Independent oracle: mutual information of square QAM over AWGN by plain
/// 2-D grid quadrature of the information integrand.
double mi_quadrature(int order, double snr_linear) {
  const auto c = qam_constellation(order);
  const double sigma2 = 1.0 / snr_linear;
  const double sigma = std::sqrt(sigma2);
  double reach = 0.0;
  for (const auto& p : c.points) reach = std::max(reach, std::abs(p.real()));
  const double lim = reach + 6.0 * sigma;
  const int grid = 220;
  const double step = 2.0 * lim / grid;
  const double m = static_cast<double>(order);

  double mi = 0.0;
  for (int ix = 0; ix < grid; ++ix) {
    const double yr = -lim + (ix + 0.5) * step;
    for (int iy = 0; iy < grid; ++iy) {
      const double yi = -lim + (iy + 0.5) * step;
      const std::complex<double> y{yr, yi};
      // p(y|x_k) up to the common Gaussian normalization.
      std::vector<double> lik(c.points.size());
      double py = 0.0;
      for (std::size_t k = 0; k < c.points.size(); ++k) {
        lik[k] = std::exp(-std::norm(y - c.points[k]) / sigma2);
        py += lik[k];
      }
      py /= m;
      if (py <= 0.0) continue;
      double cell = 0.0;
      for (std::size_t k = 0; k < c.points.size(); ++k) {
        if (lik[k] > 0.0) cell += lik[k] * std::log2(lik[k] / py);
      }
      // 1/(pi sigma^2) Gaussian normalization and the 1/m prior.
      mi += cell / m / (std::numbers::pi * sigma2) * step * step;
    }
  }
  return mi;
}

}  // namespace

TEST_CASE("mi estimator limits") {
  const auto c256 = qam_constellation(256);

  SUBCASE("noiseless frames give the full entropy") {
    const auto tx = generate_frame(1, 512, c256, 32e9);
    const auto e = mi_monte_carlo(tx, tx, c256);
    CHECK(e.mi == doctest::Approx(8.0));
    CHECK(e.std_error == doctest::Approx(0.0));
  }
  SUBCASE("extreme SNR saturates at log2(m)") {
    const auto e = mi_for_awgn_snr(1e12, c256, 2048, 3);
    CHECK(e.mi == doctest::Approx(8.0).epsilon(1e-6));
  }
  SUBCASE("vanishing SNR carries no information") {
    const auto e = mi_for_awgn_snr(1e-3, c256, 4096, 4);
    CHECK(std::abs(e.mi) < 0.05);
  }
  SUBCASE("per-polarization values are reported") {
    const auto e = mi_for_awgn_snr(linear_from_db(15.0), c256, 4096, 5);
    CHECK(e.mi == doctest::Approx(0.5 * (e.mi_pol_x + e.mi_pol_y)));
    CHECK(e.samples_used == 8192);
  }
}

TEST_CASE("mi is nondecreasing in SNR and respects capacity bounds") {
  const auto c = qam_constellation(256);
  std::vector<double> snr_db;
  for (double s = 0.0; s <= 30.0; s += 2.0) snr_db.push_back(s);

  double prev_mi = -1.0;
  double prev_err = 0.0;
  int violations = 0;
  for (double s : snr_db) {
    const double snr = linear_from_db(s);
    const auto e = mi_for_awgn_snr(snr, c, 6000, 11);
    // Upper bounds: constellation entropy and Gaussian capacity.
    CHECK(e.mi <= std::min(8.0, std::log2(1.0 + snr)) + 3.0 * e.std_error);
    if (e.mi + 2.0 * (e.std_error + prev_err) < prev_mi) ++violations;
    prev_mi = e.mi;
    prev_err = e.std_error;
  }
  CHECK(violations <= 2);
}

TEST_CASE("mi matches grid quadrature") {
  for (double snr_db : {5.0, 10.0}) {
    const double snr = linear_from_db(snr_db);
    const double oracle = mi_quadrature(16, snr);
    const auto e = mi_for_awgn_snr(snr, qam_constellation(16), 1 << 15, 21);
    CHECK(std::abs(e.mi - oracle) <= std::max(3.0 * e.std_error, 0.02));
  }
}
