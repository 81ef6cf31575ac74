#include "ssvep/recording.hpp"

#include "ssvep/csv.hpp"
#include "ssvep/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ssvep {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::RaggedRow: return "RaggedRow";
    case Errc::NonNumericSample: return "NonNumericSample";
    case Errc::WindowOutOfRange: return "WindowOutOfRange";
    case Errc::UnknownChannel: return "UnknownChannel";
    case Errc::InvalidRecording: return "InvalidRecording";
    case Errc::InvalidManifest: return "InvalidManifest";
    case Errc::InfeasibleSpec: return "InfeasibleSpec";
    case Errc::InvalidBandEdges: return "InvalidBandEdges";
    case Errc::FrequencyOutOfRange: return "FrequencyOutOfRange";
    case Errc::SeriesTooShort: return "SeriesTooShort";
    case Errc::BadPadLength: return "BadPadLength";
    case Errc::EmptyBand: return "EmptyBand";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::UnknownTarget: return "UnknownTarget";
    case Errc::NoPeak: return "NoPeak";
    case Errc::WindowTooShort: return "WindowTooShort";
    case Errc::ConstantSeries: return "ConstantSeries";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidDuty: return "InvalidDuty";
    case Errc::AliasingConfig: return "AliasingConfig";
    case Errc::TooFewSamples: return "TooFewSamples";
    case Errc::IoFailure: return "IoFailure";
    case Errc::StreamEnded: return "StreamEnded";
    case Errc::MissingAnalysis: return "MissingAnalysis";
  }
  return "Unknown";
}

Recording::Recording(double sample_rate, std::vector<Channel> channels)
    : sample_rate_(sample_rate), channels_(std::move(channels)) {
  if (!(sample_rate_ > 0.0) || !std::isfinite(sample_rate_)) {
    throw Error(Errc::InvalidRecording, "sample rate must be positive");
  }
  std::set<std::string> seen;
  for (const auto& ch : channels_) {
    if (!seen.insert(ch.id).second) throw Error(Errc::InvalidRecording, "duplicate channel id " + ch.id);
  }
  duration_samples_ = channels_.empty() ? 0 : channels_.front().samples_uV.size();
  for (const auto& ch : channels_) {
    if (ch.samples_uV.size() != duration_samples_) {
      throw Error(Errc::InvalidRecording, "channel " + ch.id + " length differs");
    }
  }
}

bool Recording::has_channel(const std::string& id) const {
  return std::any_of(channels_.begin(), channels_.end(), [&](const Channel& c) { return c.id == id; });
}

std::span<const double> Recording::channel(const std::string& id) const {
  for (const auto& ch : channels_) {
    if (ch.id == id) return ch.samples_uV;
  }
  throw Error(Errc::UnknownChannel, "no channel '" + id + "'");
}

std::size_t samples_for_seconds(double seconds, double sample_rate) {
  const double n = std::round(seconds * sample_rate);  // std::round is half away from zero
  return n <= 0.0 ? 0 : static_cast<std::size_t>(n);
}

// ---------------------------------------------------------------------------
// Recording CSV

Recording parse_recording(const std::string& text, double sample_rate) {
  const auto rows = csv::lines(text);
  if (rows.empty()) throw Error(Errc::MalformedHeader, "missing header", 1);

  std::vector<Channel> channels;
  for (auto field : csv::split(rows[0])) {
    field = csv::trim(field);
    constexpr std::string_view suffix = "_uV";
    if (field.size() <= suffix.size() || !field.ends_with(suffix)) {
      throw Error(Errc::MalformedHeader, "column '" + std::string(field) + "' is not <id>_uV", 1);
    }
    field.remove_suffix(suffix.size());
    for (const auto& ch : channels) {
      if (ch.id == field) throw Error(Errc::MalformedHeader, "duplicate channel '" + std::string(field) + "'", 1);
    }
    channels.push_back(Channel{std::string(field), {}});
  }
  for (auto& ch : channels) ch.samples_uV.reserve(rows.size() - 1);

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::size_t line = r + 1;
    const auto fields = csv::split(rows[r]);
    if (fields.size() != channels.size()) {
      throw Error(Errc::RaggedRow,
                  "line " + std::to_string(line) + " has " + std::to_string(fields.size()) + " columns, expected " +
                      std::to_string(channels.size()),
                  line);
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      auto v = csv::parse_double(fields[c]);
      if (!v) {
        throw Error(Errc::NonNumericSample,
                    "line " + std::to_string(line) + " column " + std::to_string(c + 1) + ": '" +
                        std::string(fields[c]) + "'",
                    line);
      }
      channels[c].samples_uV.push_back(*v);
    }
  }
  return Recording(sample_rate, std::move(channels));
}

Recording load_recording(const std::filesystem::path& path, double sample_rate) {
  return parse_recording(csv::read_file(path.string()), sample_rate);
}

std::string format_recording(const Recording& rec) {
  std::string out;
  const auto& chans = rec.channels();
  for (std::size_t c = 0; c < chans.size(); ++c) {
    if (c) out += ',';
    out += chans[c].id + "_uV";
  }
  out += '\n';
  for (std::size_t i = 0; i < rec.duration_samples(); ++i) {
    for (std::size_t c = 0; c < chans.size(); ++c) {
      if (c) out += ',';
      out += csv::fmt(chans[c].samples_uV[i], 9);
    }
    out += '\n';
  }
  return out;
}

void write_recording(const std::filesystem::path& path, const Recording& rec) {
  csv::write_file(path.string(), format_recording(rec));
}

// ---------------------------------------------------------------------------
// Manifest

std::vector<std::string> SessionManifest::occipital_channels() const {
  std::vector<std::string> ids;
  for (const auto& [id, role] : channel_roles) {
    if (role == ChannelRole::Occipital) ids.push_back(id);
  }
  if (ids.empty()) throw Error(Errc::InvalidManifest, "no occipital channel");
  return ids;
}

std::string SessionManifest::ear_channel() const {
  std::vector<std::string> ids;
  for (const auto& [id, role] : channel_roles) {
    if (role == ChannelRole::Ear) ids.push_back(id);
  }
  if (ids.size() != 1) throw Error(Errc::InvalidManifest, "expected exactly one ear channel");
  return ids.front();
}

std::filesystem::path SessionManifest::resolve(const TrialSpec& trial) const {
  std::filesystem::path p(trial.file);
  return p.is_absolute() ? p : base_dir / p;
}

const TrialSpec& SessionManifest::trial(const std::string& trial_id) const {
  for (const auto& t : trials) {
    if (t.trial_id == trial_id) return t;
  }
  throw Error(Errc::InvalidManifest, "no trial '" + trial_id + "'");
}

namespace {
constexpr std::string_view kManifestHeader = "trial_id,participant,stimulus_hz,file,start_s,duration_s";
}

SessionManifest parse_manifest(const std::string& text) {
  const auto rows = csv::lines(text);
  if (rows.empty() || csv::trim(rows[0]) != kManifestHeader) {
    throw Error(Errc::MalformedHeader, "manifest header must be " + std::string(kManifestHeader), 1);
  }
  SessionManifest m;
  std::set<double> stimuli;
  std::set<std::string> ids;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::size_t line = r + 1;
    const auto f = csv::split(rows[r]);
    if (f.size() != 6) throw Error(Errc::RaggedRow, "line " + std::to_string(line) + " needs 6 columns", line);
    TrialSpec t;
    t.trial_id = std::string(csv::trim(f[0]));
    t.participant = std::string(csv::trim(f[1]));
    t.file = std::string(csv::trim(f[3]));
    auto hz = csv::parse_double(f[2]);
    auto start = csv::parse_double(f[4]);
    auto dur = csv::parse_double(f[5]);
    if (!hz || !start || !dur) {
      throw Error(Errc::NonNumericSample, "line " + std::to_string(line) + ": non-numeric field", line);
    }
    t.stimulus_hz = *hz;
    t.start_s = *start;
    t.duration_s = *dur;
    if (t.trial_id.empty() || t.file.empty()) {
      throw Error(Errc::InvalidManifest, "line " + std::to_string(line) + ": empty trial_id or file", line);
    }
    if (!ids.insert(t.trial_id).second) {
      throw Error(Errc::InvalidManifest, "line " + std::to_string(line) + ": duplicate trial_id", line);
    }
    if (!(t.duration_s > 0.0) || t.start_s < 0.0) {
      throw Error(Errc::InvalidManifest, "line " + std::to_string(line) + ": bad trial window", line);
    }
    stimuli.insert(t.stimulus_hz);
    m.trials.push_back(std::move(t));
  }
  if (!stimuli.empty()) m.stimulus_set.assign(stimuli.begin(), stimuli.end());
  return m;
}

SessionManifest load_manifest(const std::filesystem::path& path) {
  SessionManifest m = parse_manifest(csv::read_file(path.string()));
  m.base_dir = path.parent_path();
  return m;
}

std::string format_manifest(const SessionManifest& manifest) {
  std::string out(kManifestHeader);
  out += '\n';
  for (const auto& t : manifest.trials) {
    out += t.trial_id + ',' + t.participant + ',' + csv::fmt(t.stimulus_hz) + ',' + t.file + ',' +
           csv::fmt(t.start_s) + ',' + csv::fmt(t.duration_s) + '\n';
  }
  return out;
}

void write_manifest(const std::filesystem::path& path, const SessionManifest& manifest) {
  csv::write_file(path.string(), format_manifest(manifest));
}

void validate_manifest(const SessionManifest& manifest, double sample_rate) {
  manifest.occipital_channels();
  manifest.ear_channel();
  for (const auto& t : manifest.trials) {
    if (std::find(manifest.stimulus_set.begin(), manifest.stimulus_set.end(), t.stimulus_hz) ==
        manifest.stimulus_set.end()) {
      throw Error(Errc::InvalidManifest, "trial " + t.trial_id + ": stimulus not in stimulus set");
    }
    const auto path = manifest.resolve(t);
    if (!std::filesystem::exists(path)) throw Error(Errc::IoFailure, "missing file " + path.string());
    const Recording rec = load_recording(path, sample_rate);
    for (const auto& [id, role] : manifest.channel_roles) {
      if (!rec.has_channel(id)) throw Error(Errc::UnknownChannel, path.string() + " lacks channel " + id);
    }
    slice_trial(rec, t);
  }
}

// ---------------------------------------------------------------------------

Recording slice_trial(const Recording& rec, const TrialSpec& spec) {
  if (spec.start_s < 0.0 || !(spec.duration_s > 0.0)) {
    throw Error(Errc::WindowOutOfRange, "trial window must have start >= 0 and positive duration");
  }
  const std::size_t first = samples_for_seconds(spec.start_s, rec.sample_rate());
  const std::size_t count = samples_for_seconds(spec.duration_s, rec.sample_rate());
  if (count == 0 || first + count > rec.duration_samples()) {
    throw Error(Errc::WindowOutOfRange, "trial " + spec.trial_id + " window [" + csv::fmt(spec.start_s) + ", " +
                                            csv::fmt(spec.start_s + spec.duration_s) + "] s exceeds recording of " +
                                            csv::fmt(rec.duration_s()) + " s");
  }
  std::vector<Channel> out;
  out.reserve(rec.channels().size());
  for (const auto& ch : rec.channels()) {
    auto begin = ch.samples_uV.begin() + static_cast<std::ptrdiff_t>(first);
    out.push_back(Channel{ch.id, std::vector<double>(begin, begin + static_cast<std::ptrdiff_t>(count))});
  }
  return Recording(rec.sample_rate(), std::move(out));
}

std::vector<double> average_channels(const Recording& rec, const std::vector<std::string>& ids) {
  if (ids.empty()) throw Error(Errc::InvalidArgument, "no channels to average");
  // Summation order fixed by id so the result is exactly permutation-invariant.
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::span<const double>> series;
  for (const auto& id : sorted) series.push_back(rec.channel(id));
  std::vector<double> out(rec.duration_samples(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double acc = 0.0;
    for (const auto& s : series) acc += s[i];
    out[i] = acc / static_cast<double>(series.size());
  }
  return out;
}

}  // namespace ssvep
