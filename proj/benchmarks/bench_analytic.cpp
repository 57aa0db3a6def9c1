#include <benchmark/benchmark.h>

#include "splitnlc/analytic.hpp"
#include "splitnlc/scenario.hpp"
#include "splitnlc/units.hpp"

using namespace splitnlc;
using namespace splitnlc::analytic;

namespace {

LinkParams link_for(int n) {
  experiments::Scenario s;
  return s.link_params(n);
}

void BM_snr_nlc(benchmark::State& state) {
  const auto link = link_for(100);
  const TrxParams trx{linear_from_db(26.0), 0.8};
  const NlcPlan plan{50};
  for (auto _ : state) {
    benchmark::DoNotOptimize(snr_nlc(1e-3, link, trx, plan));
  }
}
BENCHMARK(BM_snr_nlc);

void BM_optimal_launch_power(benchmark::State& state) {
  const auto link = link_for(static_cast<int>(state.range(0)));
  const TrxParams trx{linear_from_db(26.0), 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_launch_power(link, trx, Scheme::half_split()));
  }
}
BENCHMARK(BM_optimal_launch_power)->Arg(10)->Arg(100);

void BM_optimal_split_bruteforce(benchmark::State& state) {
  const auto link = link_for(static_cast<int>(state.range(0)));
  const TrxParams trx{linear_from_db(26.0), 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_split_bruteforce(link, trx));
  }
}
BENCHMARK(BM_optimal_split_bruteforce)->Arg(34)->Arg(120);

void BM_classify_regime(benchmark::State& state) {
  const auto link = link_for(58);
  const TrxParams trx{linear_from_db(26.0), 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_regime(link, trx));
  }
}
BENCHMARK(BM_classify_regime);

}  // namespace
