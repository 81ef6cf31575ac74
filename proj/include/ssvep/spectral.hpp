#pragma once

#include "ssvep/filters.hpp"
#include "ssvep/recording.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ssvep {

// One-sided magnitude spectrum |X_k| (unnormalised DFT) on a uniform grid.
struct SegmentSpectrum {
  std::vector<double> freqs;
  std::vector<double> magnitudes;
  std::size_t segment_index{0};
  std::string source_channel;

  double spacing() const { return freqs.size() > 1 ? freqs[1] - freqs[0] : 0.0; }
  std::size_t nearest_bin(double hz) const;
};

struct SsvepMetrics {
  double peak_hz{0.0};
  double snr_db{0.0};
  double bandwidth_hz{0.0};
  double stimulus_hz{0.0};
  bool bandwidth_clipped{false};
};

struct SpectrogramGrid {
  std::vector<double> times;  // frame centres, seconds
  std::vector<double> freqs;
  std::vector<std::vector<double>> power;  // [frame][freq]
  double window_s{1.0};
  double overlap_fraction{0.5};
};

struct Bandwidth {
  double width_hz{0.0};
  double lo_hz{0.0};
  double hi_hz{0.0};
  bool clipped{false};  // a side hit the band edge before crossing half power
};

// Non-overlapping consecutive segments of round(seg_s * fs) samples; the
// trailing remainder is dropped. Throws SeriesTooShort.
std::vector<std::vector<double>> segment_series(std::span<const double> x, double fs, double seg_s);

// Next power of two >= 8 * n.
std::size_t default_pad_length(std::size_t n);

// Throws BadPadLength when pad_to < len(segment) or pad_to == 0.
SegmentSpectrum dft_magnitude(std::span<const double> segment, double fs, std::size_t pad_to);

// Quadratically interpolated maximum inside [band_lo, band_hi]; equal maxima
// resolve to the lower frequency. Throws EmptyBand when fewer than 3 bins fall
// in the band.
double peak_frequency(const SegmentSpectrum& spec, double band_lo, double band_hi);

// 20 log10(mag[target] / mean(other magnitudes)).
// Throws UnknownTarget, ZeroDenominator, InvalidArgument (fewer than 2 entries
// or a non-positive target magnitude).
double snr_db(const std::map<double, double>& mags_at_stimuli, double target_hz);

// Half-power width around the local maximum nearest peak_hz; crossings are
// linearly interpolated in power. The search is confined to
// [band_lo, band_hi] (whole spectrum by default). Throws NoPeak.
Bandwidth bandwidth_3db(const SegmentSpectrum& spec, double peak_hz, double band_lo = -1.0, double band_hi = -1.0);

// Hann-windowed short-time power spectral density restricted to [band_lo, band_hi].
// Throws WindowTooShort when window_s * fs < 8.
SpectrogramGrid spectrogram(std::span<const double> x, double fs, double window_s, double overlap, double band_lo,
                            double band_hi);

enum class SnrReadout {
  NearestBin,  // magnitude at the grid bin nearest each stimulus frequency
  LocalPeak,   // max magnitude within +/- local_peak_hz of each stimulus
};

struct AnalysisConfig {
  FilterCoefficients filter = default_analysis_filter();
  bool zero_phase{false};
  std::size_t pad_factor{8};
  SnrReadout readout{SnrReadout::NearestBin};
  double local_peak_hz{0.5};
  double segment_s{1.0};
};

// Reads the SNR magnitudes for every stimulus from a spectrum.
std::map<double, double> stimulus_magnitudes(const SegmentSpectrum& spec, std::span<const double> stimulus_set,
                                             SnrReadout readout, double local_peak_hz);

std::vector<double> filter_series(const AnalysisConfig& cfg, std::span<const double> x);

// Peak/SNR/bandwidth of one single-channel series over its whole length.
SsvepMetrics series_metrics(std::span<const double> filtered, double fs, std::span<const double> stimulus_set,
                            double stimulus_hz, const AnalysisConfig& cfg, const std::string& channel = {});

struct RoleMetrics {
  ChannelRole role;
  SsvepMetrics metrics;
};

// Filter each role channel, average the occipital ones, and measure the
// whole-trial padded spectrum of the occipital average and the ear channel.
std::vector<RoleMetrics> trial_metrics(const Recording& trial, const std::map<std::string, ChannelRole>& roles,
                                       std::span<const double> stimulus_set, double stimulus_hz,
                                       const AnalysisConfig& cfg = {});

}  // namespace ssvep
