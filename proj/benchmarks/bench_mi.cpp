#include <benchmark/benchmark.h>

#include "splitnlc/estimators.hpp"
#include "splitnlc/units.hpp"

using namespace splitnlc;
using namespace splitnlc::dsp;

namespace {

void BM_mi_monte_carlo(benchmark::State& state) {
  const auto c = qam_constellation(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mi_for_awgn_snr(linear_from_db(18.0), c, n, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * n * 2);
}
BENCHMARK(BM_mi_monte_carlo)
    ->Args({16, 4096})
    ->Args({256, 4096})
    ->Args({256, 16384})
    ->Unit(benchmark::kMillisecond);

void BM_snr_estimate(benchmark::State& state) {
  const auto c = qam_constellation(256);
  const auto tx = generate_frame(1, 16384, c, 32e9);
  auto rx = tx;
  for (auto& v : rx.pol_x) v += 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(snr_estimate(tx, rx));
  }
}
BENCHMARK(BM_snr_estimate)->Unit(benchmark::kMicrosecond);

}  // namespace
