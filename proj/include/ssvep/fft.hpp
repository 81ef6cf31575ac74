#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ssvep {

// Reusable real-input FFT of a fixed length, backed by an FFTW_ESTIMATE plan
// (the estimate planner makes the output a pure function of the input).
// Instances are not thread-safe; plan creation is serialised internally.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const noexcept { return n_; }

  // Zero-pads `x` to size(); returns the n/2 + 1 non-negative-frequency bins.
  std::vector<std::complex<double>> forward(std::span<const double> x);
  // Inverse of forward (unnormalised, as FFTW: result is n times the signal).
  std::vector<double> inverse(std::span<const std::complex<double>> bins);

 private:
  std::size_t n_;
  double* real_{nullptr};
  void* spectrum_{nullptr};
  void* forward_plan_{nullptr};
  void* inverse_plan_{nullptr};
};

std::size_t next_pow2(std::size_t n);

}  // namespace ssvep
