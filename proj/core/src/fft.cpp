#include "splitnlc/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace splitnlc {
namespace {

struct PlanPair {
  fftw_plan fwd;
  fftw_plan bwd;
};

// FFTW planning mutates global state; execution via fftw_execute_dft on
// distinct arrays is reentrant. Plans are created unaligned so they apply to
// any caller buffer, and measured planning is reserved for the large sizes
// that dominate propagation time.
PlanPair& plans_for(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<std::complex<double>> scratch(n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags =
      FFTW_UNALIGNED | (n >= 16384 ? FFTW_MEASURE : FFTW_ESTIMATE);
  PlanPair p;
  p.fwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, flags);
  p.bwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, flags);
  return cache.emplace(n, p).first->second;
}

}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
  PlanPair& p = plans_for(n);
  fwd_ = p.fwd;
  bwd_ = p.bwd;
}

void Fft::forward(std::complex<double>* inout) const {
  auto* buf = reinterpret_cast<fftw_complex*>(inout);
  fftw_execute_dft(static_cast<fftw_plan>(fwd_), buf, buf);
}

void Fft::backward(std::complex<double>* inout) const {
  auto* buf = reinterpret_cast<fftw_complex*>(inout);
  fftw_execute_dft(static_cast<fftw_plan>(bwd_), buf, buf);
}

}  // namespace splitnlc
