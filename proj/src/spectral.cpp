#include "ssvep/spectral.hpp"

#include "ssvep/error.hpp"
#include "ssvep/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace ssvep {

std::size_t SegmentSpectrum::nearest_bin(double hz) const {
  if (freqs.empty()) throw Error(Errc::EmptyBand, "empty spectrum");
  const double df = spacing();
  if (df <= 0.0) return 0;
  const double pos = std::round((hz - freqs.front()) / df);
  if (pos <= 0.0) return 0;
  return std::min(static_cast<std::size_t>(pos), freqs.size() - 1);
}

std::vector<std::vector<double>> segment_series(std::span<const double> x, double fs, double seg_s) {
  if (!(seg_s > 0.0) || !(fs > 0.0)) throw Error(Errc::InvalidArgument, "segment length and fs must be positive");
  const std::size_t len = samples_for_seconds(seg_s, fs);
  if (len == 0 || x.size() < len) {
    throw Error(Errc::SeriesTooShort, std::to_string(x.size()) + " samples cannot hold a " +
                                          std::to_string(len) + "-sample segment");
  }
  std::vector<std::vector<double>> out;
  out.reserve(x.size() / len);
  for (std::size_t start = 0; start + len <= x.size(); start += len) {
    out.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(start),
                     x.begin() + static_cast<std::ptrdiff_t>(start + len));
  }
  return out;
}

std::size_t default_pad_length(std::size_t n) { return next_pow2(8 * std::max<std::size_t>(n, 1)); }

SegmentSpectrum dft_magnitude(std::span<const double> segment, double fs, std::size_t pad_to) {
  if (pad_to == 0 || pad_to < segment.size()) {
    throw Error(Errc::BadPadLength, "pad_to " + std::to_string(pad_to) + " shorter than segment of " +
                                        std::to_string(segment.size()));
  }
  RealFft fft(pad_to);
  const auto bins = fft.forward(segment);
  SegmentSpectrum spec;
  spec.freqs.resize(bins.size());
  spec.magnitudes.resize(bins.size());
  for (std::size_t k = 0; k < bins.size(); ++k) {
    spec.freqs[k] = static_cast<double>(k) * fs / static_cast<double>(pad_to);
    spec.magnitudes[k] = std::abs(bins[k]);
  }
  return spec;
}

namespace {

struct BinRange {
  std::size_t first;
  std::size_t last;  // inclusive
};

std::optional<BinRange> bins_in_band(const SegmentSpectrum& spec, double lo, double hi) {
  const double tol = 1e-9 * std::max(1.0, spec.spacing());
  auto first = std::lower_bound(spec.freqs.begin(), spec.freqs.end(), lo - tol);
  auto last = std::upper_bound(spec.freqs.begin(), spec.freqs.end(), hi + tol);
  if (first >= last) return std::nullopt;
  return BinRange{static_cast<std::size_t>(first - spec.freqs.begin()),
                  static_cast<std::size_t>(last - spec.freqs.begin()) - 1};
}

}  // namespace

double peak_frequency(const SegmentSpectrum& spec, double band_lo, double band_hi) {
  const auto range = bins_in_band(spec, band_lo, band_hi);
  if (!range || range->last - range->first + 1 < 3) {
    throw Error(Errc::EmptyBand, "fewer than 3 bins in [" + std::to_string(band_lo) + ", " +
                                     std::to_string(band_hi) + "] Hz");
  }
  const auto& m = spec.magnitudes;
  std::size_t k = range->first;
  for (std::size_t i = range->first + 1; i <= range->last; ++i) {
    if (m[i] > m[k]) k = i;
  }
  double offset = 0.0;
  if (k > 0 && k + 1 < m.size()) {
    const double a = m[k - 1], b = m[k], c = m[k + 1];
    const double denom = a - 2.0 * b + c;
    if (denom < 0.0) offset = std::clamp(0.5 * (a - c) / denom, -0.5, 0.5);
  }
  const double hz = spec.freqs[k] + offset * spec.spacing();
  return std::clamp(hz, band_lo, band_hi);
}

double snr_db(const std::map<double, double>& mags_at_stimuli, double target_hz) {
  if (mags_at_stimuli.size() < 2) throw Error(Errc::InvalidArgument, "SNR needs at least two stimulus magnitudes");
  auto it = mags_at_stimuli.find(target_hz);
  if (it == mags_at_stimuli.end()) throw Error(Errc::UnknownTarget, std::to_string(target_hz) + " Hz not a stimulus");
  double sum = 0.0;
  for (const auto& [hz, mag] : mags_at_stimuli) {
    if (mag < 0.0 || !std::isfinite(mag)) throw Error(Errc::InvalidArgument, "magnitudes must be finite and >= 0");
    if (hz != target_hz) sum += mag;
  }
  const double mean = sum / static_cast<double>(mags_at_stimuli.size() - 1);
  if (!(mean > 0.0)) throw Error(Errc::ZeroDenominator, "other stimulus magnitudes are all zero");
  if (!(it->second > 0.0)) throw Error(Errc::InvalidArgument, "target magnitude must be positive");
  return 20.0 * std::log10(it->second / mean);
}

Bandwidth bandwidth_3db(const SegmentSpectrum& spec, double peak_hz, double band_lo, double band_hi) {
  if (spec.freqs.size() < 2) throw Error(Errc::NoPeak, "spectrum too short");
  if (band_lo < 0.0) band_lo = spec.freqs.front();
  if (band_hi < 0.0) band_hi = spec.freqs.back();
  const auto range = bins_in_band(spec, band_lo, band_hi);
  if (!range) throw Error(Errc::NoPeak, "band holds no bins");

  const auto& m = spec.magnitudes;
  std::size_t k = std::clamp(spec.nearest_bin(peak_hz), range->first, range->last);
  // Climb to the local maximum nearest the requested peak.
  while (true) {
    if (k > range->first && m[k - 1] > m[k]) {
      --k;
    } else if (k < range->last && m[k + 1] > m[k]) {
      ++k;
    } else {
      break;
    }
  }
  const double peak_power = m[k] * m[k];
  if (!(peak_power > 0.0)) throw Error(Errc::NoPeak, "zero magnitude at peak");
  const double half = peak_power / 2.0;
  auto power = [&](std::size_t i) { return m[i] * m[i]; };
  auto crossing = [&](std::size_t inside, std::size_t outside) {
    const double pin = power(inside), pout = power(outside);
    const double t = (pin - half) / (pin - pout);
    return spec.freqs[inside] + t * (spec.freqs[outside] - spec.freqs[inside]);
  };

  Bandwidth bw;
  std::size_t j = k;
  while (j < range->last && power(j + 1) >= half) ++j;
  if (j == range->last) {
    bw.hi_hz = std::min(band_hi, spec.freqs[range->last]);
    bw.clipped = true;
  } else {
    bw.hi_hz = crossing(j, j + 1);
  }
  j = k;
  while (j > range->first && power(j - 1) >= half) --j;
  if (j == range->first) {
    bw.lo_hz = std::max(band_lo, spec.freqs[range->first]);
    bw.clipped = true;
  } else {
    bw.lo_hz = crossing(j, j - 1);
  }
  bw.width_hz = bw.hi_hz - bw.lo_hz;
  return bw;
}

SpectrogramGrid spectrogram(std::span<const double> x, double fs, double window_s, double overlap, double band_lo,
                            double band_hi) {
  const std::size_t nperseg = samples_for_seconds(window_s, fs);
  if (nperseg < 8) throw Error(Errc::WindowTooShort, "spectrogram window must span at least 8 samples");
  if (!(overlap >= 0.0 && overlap < 1.0)) throw Error(Errc::InvalidArgument, "overlap must lie in [0, 1)");
  const std::size_t hop =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::round(static_cast<double>(nperseg) * (1.0 - overlap))));

  std::vector<double> window(nperseg);
  double wsum2 = 0.0;
  for (std::size_t i = 0; i < nperseg; ++i) {
    window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(nperseg));
    wsum2 += window[i] * window[i];
  }

  SpectrogramGrid grid;
  grid.window_s = window_s;
  grid.overlap_fraction = overlap;
  std::vector<std::size_t> keep;
  const std::size_t nbins = nperseg / 2 + 1;
  for (std::size_t k = 0; k < nbins; ++k) {
    const double hz = static_cast<double>(k) * fs / static_cast<double>(nperseg);
    if (hz >= band_lo && hz <= band_hi) {
      keep.push_back(k);
      grid.freqs.push_back(hz);
    }
  }

  RealFft fft(nperseg);
  std::vector<double> frame(nperseg);
  const double scale = 1.0 / (fs * wsum2);
  for (std::size_t start = 0; start + nperseg <= x.size(); start += hop) {
    for (std::size_t i = 0; i < nperseg; ++i) frame[i] = x[start + i] * window[i];
    const auto bins = fft.forward(frame);
    std::vector<double> row;
    row.reserve(keep.size());
    for (std::size_t k : keep) {
      double p = std::norm(bins[k]) * scale;
      const bool edge = k == 0 || (nperseg % 2 == 0 && k == nperseg / 2);
      if (!edge) p *= 2.0;
      row.push_back(p);
    }
    grid.power.push_back(std::move(row));
    grid.times.push_back((static_cast<double>(start) + static_cast<double>(nperseg) / 2.0) / fs);
  }
  return grid;
}

std::map<double, double> stimulus_magnitudes(const SegmentSpectrum& spec, std::span<const double> stimulus_set,
                                             SnrReadout readout, double local_peak_hz) {
  std::map<double, double> out;
  for (double hz : stimulus_set) {
    double mag = spec.magnitudes[spec.nearest_bin(hz)];
    if (readout == SnrReadout::LocalPeak) {
      if (auto range = bins_in_band(spec, hz - local_peak_hz, hz + local_peak_hz)) {
        for (std::size_t i = range->first; i <= range->last; ++i) mag = std::max(mag, spec.magnitudes[i]);
      }
    }
    out[hz] = mag;
  }
  return out;
}

std::vector<double> filter_series(const AnalysisConfig& cfg, std::span<const double> x) {
  return cfg.zero_phase ? apply_filter_zero_phase(cfg.filter, x) : apply_filter(cfg.filter, x);
}

SsvepMetrics series_metrics(std::span<const double> filtered, double fs, std::span<const double> stimulus_set,
                            double stimulus_hz, const AnalysisConfig& cfg, const std::string& channel) {
  if (std::find(stimulus_set.begin(), stimulus_set.end(), stimulus_hz) == stimulus_set.end()) {
    throw Error(Errc::UnknownTarget, std::to_string(stimulus_hz) + " Hz not in stimulus set");
  }
  const std::size_t pad = next_pow2(cfg.pad_factor * std::max<std::size_t>(filtered.size(), 1));
  SegmentSpectrum spec = dft_magnitude(filtered, fs, pad);
  spec.source_channel = channel;

  const double lo = cfg.filter.design.pass_lo_hz;
  const double hi = cfg.filter.design.pass_hi_hz;
  SsvepMetrics out;
  out.stimulus_hz = stimulus_hz;
  out.peak_hz = peak_frequency(spec, lo, hi);
  out.snr_db = snr_db(stimulus_magnitudes(spec, stimulus_set, cfg.readout, cfg.local_peak_hz), stimulus_hz);
  const Bandwidth bw = bandwidth_3db(spec, out.peak_hz, lo, hi);
  out.bandwidth_hz = bw.width_hz;
  out.bandwidth_clipped = bw.clipped;
  return out;
}

std::vector<RoleMetrics> trial_metrics(const Recording& trial, const std::map<std::string, ChannelRole>& roles,
                                       std::span<const double> stimulus_set, double stimulus_hz,
                                       const AnalysisConfig& cfg) {
  std::vector<std::string> occipital;
  std::vector<std::string> ear;
  for (const auto& [id, role] : roles) (role == ChannelRole::Occipital ? occipital : ear).push_back(id);
  if (occipital.empty() || ear.size() != 1) {
    throw Error(Errc::InvalidManifest, "need at least one occipital and exactly one ear channel");
  }

  std::vector<Channel> filtered;
  for (const auto& id : occipital) filtered.push_back(Channel{id, filter_series(cfg, trial.channel(id))});
  filtered.push_back(Channel{ear.front(), filter_series(cfg, trial.channel(ear.front()))});
  const Recording rec(trial.sample_rate(), std::move(filtered));

  const auto occ_avg = average_channels(rec, occipital);
  return {
      {ChannelRole::Occipital, series_metrics(occ_avg, rec.sample_rate(), stimulus_set, stimulus_hz, cfg, "O(avg)")},
      {ChannelRole::Ear,
       series_metrics(rec.channel(ear.front()), rec.sample_rate(), stimulus_set, stimulus_hz, cfg, ear.front())},
  };
}

}  // namespace ssvep
