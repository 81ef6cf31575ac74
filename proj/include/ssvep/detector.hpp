#pragma once

#include "ssvep/recording.hpp"
#include "ssvep/spectral.hpp"

#include <chrono>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ssvep {

struct Decision {
  double window_start_s{0.0};
  std::optional<double> chosen_hz;  // empty: abstained
  std::map<double, double> scores;  // stimulus Hz -> SNR dB against the other candidates
  double confidence_db{0.0};        // best minus second-best score

  friend bool operator==(const Decision&, const Decision&) = default;
};

struct DetectorConfig {
  std::vector<double> stimulus_set{7.0, 9.0, 11.0, 13.0};
  double min_margin_db{1.0};
  double window_s{2.0};
  double hop_s{1.0};
  AnalysisConfig analysis;
};

// Argmax over scores (ties to the lower frequency); abstains when the margin
// to the runner-up is below min_margin_db.
Decision decide(std::map<double, double> scores, double min_margin_db);

// Filters the window from zero state, takes its padded spectrum and scores
// every candidate by SNR against the others. Throws WindowTooShort (< 1 s)
// and InvalidArgument (fewer than 2 candidates). A window with no energy at
// any candidate abstains with all-zero scores.
Decision classify_window(std::span<const double> x, double fs, const DetectorConfig& cfg);

// classify_window over windows starting at 0, hop, 2 hop, ...
std::vector<Decision> classify_windows(std::span<const double> x, double fs, const DetectorConfig& cfg);

class SampleSource {
 public:
  virtual ~SampleSource() = default;
  // Next sample, or nullopt once the stream has ended.
  virtual std::optional<double> next() = 0;
  virtual double sample_rate() const = 0;
};

// Replays one channel of a recording, optionally paced at 1/fs per sample.
class ReplayStream final : public SampleSource {
 public:
  std::optional<double> next() override;
  double sample_rate() const override { return fs_; }

 private:
  friend ReplayStream replay_stream(const Recording& rec, const std::string& channel, bool realtime);
  ReplayStream(std::vector<double> samples, double fs, bool realtime);

  std::vector<double> samples_;
  double fs_;
  bool realtime_;
  std::size_t pos_{0};
  std::chrono::steady_clock::time_point start_;
};

// Throws UnknownChannel.
ReplayStream replay_stream(const Recording& rec, const std::string& channel, bool realtime = false);

// Incremental detector: push samples in order, receive a Decision whenever a
// hop completes after the first full window.
class StreamDetector {
 public:
  StreamDetector(double fs, DetectorConfig cfg);

  std::optional<Decision> push(double sample);
  std::size_t samples_seen() const noexcept { return seen_; }

 private:
  double fs_;
  DetectorConfig cfg_;
  std::size_t window_;
  std::size_t hop_;
  std::size_t seen_{0};
  std::deque<double> buffer_;
};

struct StreamOutcome {
  std::vector<Decision> decisions;
  std::size_t samples_consumed{0};
  bool ended{false};  // the source signalled end of stream
};

StreamOutcome stream_detect(SampleSource& source, const DetectorConfig& cfg);

}  // namespace ssvep
