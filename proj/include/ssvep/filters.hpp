#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ssvep {

// Second-order section, a0 normalised to 1.
struct Biquad {
  double b0{1.0}, b1{0.0}, b2{0.0};
  double a1{0.0}, a2{0.0};
};

struct FilterDesign {
  int order{4};  // final bandpass order (two poles per section)
  double pass_lo_hz{6.0};
  double pass_hi_hz{14.0};
  double stop_lo_hz{5.0};
  double stop_hi_hz{15.0};
  double ripple_db{1.0};
  double atten_db{40.0};
  double sample_rate{250.0};
};

struct FilterCoefficients {
  std::vector<Biquad> sections;
  FilterDesign design;
};

// Smallest even bandpass order whose elliptic design meets `spec`'s ripple in
// the passband and attenuation beyond both stop edges. `spec.order` is ignored.
int minimum_elliptic_order(const FilterDesign& spec);

// Strict design: the stop edges are requirements. Throws InvalidBandEdges when
// the edges are not ordered inside (0, fs/2) or the order is odd/below 2, and
// InfeasibleSpec when `spec.order` is below minimum_elliptic_order(spec).
FilterCoefficients design_elliptic_bandpass(const FilterDesign& spec);

// Order-driven design (passband edges exact, atten_db is the stopband floor).
// The returned design records the stop edges actually achieved; the input
// stop edges are ignored.
FilterCoefficients design_elliptic_bandpass_by_order(int order, double pass_lo_hz, double pass_hi_hz,
                                                     double ripple_db, double atten_db, double sample_rate);

// Default analysis filter: order 4, 6-14 Hz passband, 1 dB ripple, 40 dB floor.
FilterCoefficients default_analysis_filter(double sample_rate = 250.0);
// Narrowband display filter for waveform plots (6-8 Hz passband).
FilterCoefficients display_filter(double sample_rate = 250.0);

// Cascade response at each frequency. Throws FrequencyOutOfRange outside [0, fs/2].
std::vector<std::complex<double>> frequency_response(const FilterCoefficients& f, std::span<const double> freqs_hz);

double max_pole_radius(const FilterCoefficients& f);

// Causal transposed direct-form II cascade with zero initial state.
std::vector<double> apply_filter(const FilterCoefficients& f, std::span<const double> x);

// Forward-backward filtering. Throws SeriesTooShort unless len(x) > 6 * sections.
std::vector<double> apply_filter_zero_phase(const FilterCoefficients& f, std::span<const double> x);

}  // namespace ssvep
