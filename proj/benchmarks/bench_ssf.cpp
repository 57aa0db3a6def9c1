#include <benchmark/benchmark.h>

#include <cmath>

#include "splitnlc/fiber.hpp"
#include "splitnlc/frame.hpp"
#include "splitnlc/shaping.hpp"

using namespace splitnlc;
using namespace splitnlc::dsp;
using namespace splitnlc::fiber;

namespace {

SampledWaveform bench_waveform(std::size_t n_sym) {
  const auto c = qam_constellation(16);
  std::vector<SymbolFrame> frames;
  for (int ch = 0; ch < 3; ++ch)
    frames.push_back(generate_frame(100 + ch, n_sym, c, 32e9));
  auto w = shape_and_mux(frames, 32e9, 3);
  scale(w, std::sqrt(1e-3 / 2.0));
  return w;
}

void BM_ssf_span_forward(benchmark::State& state) {
  const auto w = bench_waveform(static_cast<std::size_t>(state.range(0)));
  const FiberParams fiber;
  SsfConfig cfg;
  cfg.steps_per_span = static_cast<int>(state.range(1));
  (void)ssf_span(w, fiber, cfg);  // warm the plan and propagator caches
  for (auto _ : state) {
    benchmark::DoNotOptimize(ssf_span(w, fiber, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_ssf_span_forward)
    ->Args({2048, 100})
    ->Args({4096, 100})
    ->Args({16384, 100})
    ->Unit(benchmark::kMillisecond);

void BM_virtual_span(benchmark::State& state) {
  const auto w = bench_waveform(2048);
  const FiberParams fiber;
  SsfConfig cfg;
  cfg.steps_per_span = 100;
  (void)virtual_link(w, 1, fiber, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(virtual_link(w, 1, fiber, cfg));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_virtual_span)->Unit(benchmark::kMillisecond);

void BM_edfa(benchmark::State& state) {
  const auto w = bench_waveform(4096);
  const auto amp = AmpParams::for_span_loss(FiberParams{});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(edfa(w, amp, ++seed));
  }
}
BENCHMARK(BM_edfa)->Unit(benchmark::kMillisecond);

void BM_mux_demux(benchmark::State& state) {
  const auto c = qam_constellation(16);
  std::vector<SymbolFrame> frames;
  for (int ch = 0; ch < 3; ++ch)
    frames.push_back(generate_frame(7 + ch, 4096, c, 32e9));
  for (auto _ : state) {
    const auto w = shape_and_mux(frames, 32e9, 3);
    benchmark::DoNotOptimize(matched_filter_demux(w, 1));
  }
}
BENCHMARK(BM_mux_demux)->Unit(benchmark::kMillisecond);

}  // namespace
