#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "splitnlc/constellation.hpp"
#include "splitnlc/frame.hpp"

using namespace splitnlc::dsp;

namespace {

double avg_power(const Constellation& c) {
  double s = 0.0;
  for (const auto& p : c.points) s += std::norm(p);
  return s / static_cast<double>(c.points.size());
}

}  // namespace

TEST_CASE("qam constellations") {
  SUBCASE("qpsk points") {
    const auto c = qam_constellation(4);
    const double a = 1.0 / std::sqrt(2.0);
    std::multiset<std::pair<double, double>> expect = {
        {a, a}, {a, -a}, {-a, a}, {-a, -a}};
    std::multiset<std::pair<double, double>> got;
    for (const auto& p : c.points) got.insert({p.real(), p.imag()});
    for (auto it = expect.begin(), jt = got.begin(); it != expect.end(); ++it, ++jt) {
      CHECK(it->first == doctest::Approx(jt->first).epsilon(1e-12));
      CHECK(it->second == doctest::Approx(jt->second).epsilon(1e-12));
    }
  }
  SUBCASE("unit average power") {
    for (int m : {4, 16, 64, 256}) {
      CHECK(avg_power(qam_constellation(m)) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("16-qam levels") {
    const auto c = qam_constellation(16);
    const double s = 1.0 / std::sqrt(10.0);
    for (const auto& p : c.points) {
      const double re = std::abs(p.real()) / s;
      CHECK((std::abs(re - 1.0) < 1e-9 || std::abs(re - 3.0) < 1e-9));
    }
  }
  SUBCASE("256-qam peak power") {
    const auto c = qam_constellation(256);
    double peak = 0.0;
    for (const auto& p : c.points) peak = std::max(peak, std::norm(p));
    CHECK(peak == doctest::Approx(2.0 * 15.0 * 15.0 / 170.0).epsilon(1e-12));
  }
  SUBCASE("gray mapping along each axis") {
    const auto c = qam_constellation(64);
    const int side = 8;
    // Sort indices by the in-phase level; adjacent levels must differ in one
    // bit of the high half.
    for (int row = 0; row < side; ++row) {
      std::vector<std::pair<double, int>> by_level;
      for (int idx = 0; idx < 64; ++idx) {
        if ((idx & (side - 1)) != row) continue;
        by_level.push_back({c.points[idx].real(), idx});
      }
      std::sort(by_level.begin(), by_level.end());
      for (std::size_t i = 1; i < by_level.size(); ++i) {
        const unsigned a = static_cast<unsigned>(by_level[i - 1].second) >> 3;
        const unsigned b = static_cast<unsigned>(by_level[i].second) >> 3;
        CHECK(std::popcount(a ^ b) == 1);
      }
    }
  }
  SUBCASE("unsupported order") {
    CHECK_THROWS_AS(qam_constellation(8), std::invalid_argument);
    CHECK_THROWS_AS(qam_constellation(1024), std::invalid_argument);
  }
}

TEST_CASE("generate_frame determinism and statistics") {
  const auto c = qam_constellation(16);

  SUBCASE("bit-identical repeats") {
    const auto a = generate_frame(1234, 4096, c, 32e9);
    const auto b = generate_frame(1234, 4096, c, 32e9);
    CHECK(a.pol_x == b.pol_x);
    CHECK(a.pol_y == b.pol_y);
    const auto other = generate_frame(1235, 4096, c, 32e9);
    CHECK(a.pol_x != other.pol_x);
  }
  SUBCASE("polarizations draw independent streams") {
    const auto f = generate_frame(7, 1024, c, 32e9);
    CHECK(f.pol_x != f.pol_y);
  }
  SUBCASE("uniform symbol frequencies within four sigma") {
    const std::size_t n = 1 << 16;
    const auto f = generate_frame(99, n, c, 32e9);
    std::vector<int> counts(16, 0);
    for (const auto& s : f.pol_x) {
      const auto it = std::find_if(c.points.begin(), c.points.end(),
                                   [&](const auto& p) { return p == s; });
      REQUIRE(it != c.points.end());
      ++counts[static_cast<int>(it - c.points.begin())];
    }
    const double p = 1.0 / 16.0;
    const double sigma = std::sqrt(static_cast<double>(n) * p * (1.0 - p));
    for (int k = 0; k < 16; ++k) {
      CHECK(std::abs(counts[k] - static_cast<double>(n) * p) <= 4.0 * sigma);
    }
  }
  SUBCASE("mean power concentrates around one") {
    const std::size_t n = 1 << 16;
    const auto f = generate_frame(5, n, c, 32e9);
    double s = 0.0;
    for (const auto& v : f.pol_x) s += std::norm(v);
    s /= static_cast<double>(n);
    CHECK(std::abs(s - 1.0) <= 5.0 / std::sqrt(static_cast<double>(n)));
  }
  SUBCASE("empty frames are rejected") {
    CHECK_THROWS_AS(generate_frame(1, 0, c, 32e9), std::invalid_argument);
  }
}
