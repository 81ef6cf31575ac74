#include "ssvep/detector.hpp"

#include "ssvep/error.hpp"
#include "ssvep/fft.hpp"

#include <algorithm>
#include <thread>

namespace ssvep {

namespace {

struct Geometry {
  std::size_t window;
  std::size_t hop;
};

Geometry geometry(double fs, const DetectorConfig& cfg) {
  if (!(cfg.hop_s > 0.0) || cfg.hop_s > cfg.window_s) throw Error(Errc::InvalidArgument, "need 0 < hop <= window");
  Geometry g{samples_for_seconds(cfg.window_s, fs), samples_for_seconds(cfg.hop_s, fs)};
  if (g.window < samples_for_seconds(1.0, fs)) throw Error(Errc::WindowTooShort, "detector window must be >= 1 s");
  g.hop = std::max<std::size_t>(g.hop, 1);
  return g;
}

}  // namespace

Decision decide(std::map<double, double> scores, double min_margin_db) {
  Decision d;
  d.scores = std::move(scores);
  if (d.scores.empty()) return d;
  // std::map iterates in ascending frequency; strict comparisons keep the lower one on ties.
  auto best = d.scores.begin();
  for (auto it = d.scores.begin(); it != d.scores.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  std::optional<double> runner_up;
  for (auto it = d.scores.begin(); it != d.scores.end(); ++it) {
    if (it != best && (!runner_up || it->second > *runner_up)) runner_up = it->second;
  }
  d.confidence_db = runner_up ? best->second - *runner_up : 0.0;
  if (d.confidence_db >= min_margin_db) d.chosen_hz = best->first;
  return d;
}

Decision classify_window(std::span<const double> x, double fs, const DetectorConfig& cfg) {
  if (cfg.stimulus_set.size() < 2) throw Error(Errc::InvalidArgument, "need at least two candidate frequencies");
  if (x.size() < samples_for_seconds(1.0, fs)) throw Error(Errc::WindowTooShort, "detector window must be >= 1 s");

  const std::vector<double> filtered = filter_series(cfg.analysis, x);
  const auto spec = dft_magnitude(filtered, fs, next_pow2(cfg.analysis.pad_factor * filtered.size()));
  const auto mags = stimulus_magnitudes(spec, cfg.stimulus_set, cfg.analysis.readout, cfg.analysis.local_peak_hz);

  std::map<double, double> scores;
  const bool degenerate = std::any_of(mags.begin(), mags.end(), [](const auto& kv) { return !(kv.second > 0.0); });
  for (const auto& [hz, mag] : mags) scores[hz] = degenerate ? 0.0 : snr_db(mags, hz);
  Decision d = decide(std::move(scores), cfg.min_margin_db);
  if (degenerate) d.chosen_hz.reset();
  return d;
}

std::vector<Decision> classify_windows(std::span<const double> x, double fs, const DetectorConfig& cfg) {
  const Geometry g = geometry(fs, cfg);
  std::vector<Decision> out;
  for (std::size_t start = 0; start + g.window <= x.size(); start += g.hop) {
    Decision d = classify_window(x.subspan(start, g.window), fs, cfg);
    d.window_start_s = static_cast<double>(start) / fs;
    out.push_back(std::move(d));
  }
  return out;
}

ReplayStream::ReplayStream(std::vector<double> samples, double fs, bool realtime)
    : samples_(std::move(samples)), fs_(fs), realtime_(realtime) {}

std::optional<double> ReplayStream::next() {
  if (pos_ >= samples_.size()) return std::nullopt;
  if (realtime_) {
    if (pos_ == 0) start_ = std::chrono::steady_clock::now();
    const auto due = start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(static_cast<double>(pos_) / fs_));
    std::this_thread::sleep_until(due);
  }
  return samples_[pos_++];
}

ReplayStream replay_stream(const Recording& rec, const std::string& channel, bool realtime) {
  const auto samples = rec.channel(channel);
  return ReplayStream(std::vector<double>(samples.begin(), samples.end()), rec.sample_rate(), realtime);
}

StreamDetector::StreamDetector(double fs, DetectorConfig cfg) : fs_(fs), cfg_(std::move(cfg)) {
  const Geometry g = geometry(fs_, cfg_);
  window_ = g.window;
  hop_ = g.hop;
}

std::optional<Decision> StreamDetector::push(double sample) {
  buffer_.push_back(sample);
  ++seen_;
  if (buffer_.size() > window_) buffer_.pop_front();
  if (seen_ < window_ || (seen_ - window_) % hop_ != 0) return std::nullopt;

  const std::vector<double> window(buffer_.begin(), buffer_.end());
  Decision d = classify_window(window, fs_, cfg_);
  d.window_start_s = static_cast<double>(seen_ - window_) / fs_;
  return d;
}

StreamOutcome stream_detect(SampleSource& source, const DetectorConfig& cfg) {
  StreamDetector detector(source.sample_rate(), cfg);
  StreamOutcome out;
  while (auto sample = source.next()) {
    if (auto d = detector.push(*sample)) out.decisions.push_back(std::move(*d));
  }
  out.samples_consumed = detector.samples_seen();
  out.ended = true;
  return out;
}

}  // namespace ssvep
