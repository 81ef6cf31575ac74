#include "ssvep/fft.hpp"

#include "ssvep/error.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

namespace ssvep {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "FFT length must be positive");
  real_ = fftw_alloc_real(n);
  auto* spec = fftw_alloc_complex(n / 2 + 1);
  spectrum_ = spec;
  std::lock_guard lock(planner_mutex());
  const int len = static_cast<int>(n);
  forward_plan_ = fftw_plan_dft_r2c_1d(len, real_, spec, FFTW_ESTIMATE);
  inverse_plan_ = fftw_plan_dft_c2r_1d(len, spec, real_, FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
  fftw_free(real_);
  fftw_free(spectrum_);
}

std::vector<std::complex<double>> RealFft::forward(std::span<const double> x) {
  if (x.size() > n_) throw Error(Errc::BadPadLength, "input longer than FFT length");
  std::copy(x.begin(), x.end(), real_);
  std::fill(real_ + x.size(), real_ + n_, 0.0);
  fftw_execute(static_cast<fftw_plan>(forward_plan_));
  auto* spec = static_cast<fftw_complex*>(spectrum_);
  std::vector<std::complex<double>> out(n_ / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = {spec[k][0], spec[k][1]};
  return out;
}

std::vector<double> RealFft::inverse(std::span<const std::complex<double>> bins) {
  if (bins.size() != n_ / 2 + 1) throw Error(Errc::InvalidArgument, "inverse FFT needs n/2+1 bins");
  auto* spec = static_cast<fftw_complex*>(spectrum_);
  for (std::size_t k = 0; k < bins.size(); ++k) {
    spec[k][0] = bins[k].real();
    spec[k][1] = bins[k].imag();
  }
  // c2r destroys its input array, which is scratch here.
  fftw_execute(static_cast<fftw_plan>(inverse_plan_));
  return std::vector<double>(real_, real_ + n_);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace ssvep
