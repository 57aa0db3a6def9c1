#pragma once

#include <complex>
#include <cstddef>

namespace splitnlc {

/// In-place complex FFT of a fixed size, backed by a process-wide plan cache.
///
/// Plans are created once per size (planning is serialized internally) and
/// may be executed concurrently from any number of threads on distinct
/// buffers. Transforms are unnormalized in both directions; callers fold the
/// 1/n where it is cheapest.
class Fft {
 public:
  explicit Fft(std::size_t n);

  void forward(std::complex<double>* inout) const;
  void backward(std::complex<double>* inout) const;

  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  void* fwd_;  // fftw_plan
  void* bwd_;
};

}  // namespace splitnlc
