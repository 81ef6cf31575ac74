#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ssvep {

inline constexpr double kDefaultSampleRate = 250.0;

struct Channel {
  std::string id;
  std::vector<double> samples_uV;
  friend bool operator==(const Channel&, const Channel&) = default;
};

// Multichannel recording. Every channel holds the same number of samples.
class Recording {
 public:
  Recording() = default;
  // Throws InvalidRecording if the channel invariants do not hold.
  Recording(double sample_rate, std::vector<Channel> channels);

  double sample_rate() const noexcept { return sample_rate_; }
  std::size_t duration_samples() const noexcept { return duration_samples_; }
  double duration_s() const noexcept { return static_cast<double>(duration_samples_) / sample_rate_; }
  const std::vector<Channel>& channels() const noexcept { return channels_; }

  bool has_channel(const std::string& id) const;
  // Throws UnknownChannel.
  std::span<const double> channel(const std::string& id) const;

  friend bool operator==(const Recording&, const Recording&) = default;

 private:
  double sample_rate_{kDefaultSampleRate};
  std::vector<Channel> channels_;
  std::size_t duration_samples_{0};
};

struct TrialSpec {
  std::string trial_id;
  std::string participant;
  double stimulus_hz{0.0};
  std::string file;  // relative paths resolve against the manifest's directory
  double start_s{0.0};
  double duration_s{0.0};
};

enum class ChannelRole { Occipital, Ear };

struct SessionManifest {
  std::vector<double> stimulus_set{7.0, 9.0, 11.0, 13.0};
  std::vector<TrialSpec> trials;
  std::map<std::string, ChannelRole> channel_roles{
      {"o1", ChannelRole::Occipital}, {"o2", ChannelRole::Occipital}, {"ear", ChannelRole::Ear}};
  std::filesystem::path base_dir;  // directory the manifest was loaded from

  std::vector<std::string> occipital_channels() const;
  std::string ear_channel() const;  // throws InvalidManifest unless exactly one
  std::filesystem::path resolve(const TrialSpec& trial) const;
  const TrialSpec& trial(const std::string& trial_id) const;
};

// Seconds to samples, round half away from zero.
std::size_t samples_for_seconds(double seconds, double sample_rate);

// Recording CSV: header `<id>_uV,...`, one sample per row.
Recording load_recording(const std::filesystem::path& path, double sample_rate = kDefaultSampleRate);
Recording parse_recording(const std::string& text, double sample_rate = kDefaultSampleRate);
std::string format_recording(const Recording& rec);
void write_recording(const std::filesystem::path& path, const Recording& rec);

// Manifest CSV: `trial_id,participant,stimulus_hz,file,start_s,duration_s`.
// The stimulus set is the sorted set of stimulus_hz values present unless the
// caller overrides it; roles default to o1/o2 occipital and ear.
SessionManifest load_manifest(const std::filesystem::path& path);
SessionManifest parse_manifest(const std::string& text);
std::string format_manifest(const SessionManifest& manifest);
void write_manifest(const std::filesystem::path& path, const SessionManifest& manifest);

// Checks file existence, parsing and trial windows for every trial.
void validate_manifest(const SessionManifest& manifest, double sample_rate = kDefaultSampleRate);

Recording slice_trial(const Recording& rec, const TrialSpec& spec);
std::vector<double> average_channels(const Recording& rec, const std::vector<std::string>& ids);

}  // namespace ssvep
