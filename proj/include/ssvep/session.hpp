#pragma once

#include "ssvep/recording.hpp"
#include "ssvep/spectral.hpp"
#include "ssvep/stats.hpp"

#include <map>
#include <string>
#include <vector>

namespace ssvep {

std::string_view role_name(ChannelRole role);

struct TrialResult {
  TrialSpec spec;
  std::vector<RoleMetrics> roles;
};

// One row per (participant, stimulus, role): metrics averaged over that
// participant's trials at that stimulus.
struct SummaryRow {
  std::string participant;
  double stimulus_hz{0.0};
  ChannelRole role{ChannelRole::Occipital};
  double peak_hz{0.0};
  double snr_db{0.0};
  double bandwidth_hz{0.0};
  std::size_t n_trials{0};
  std::size_t n_clipped{0};
};

// Loads, slices and measures every trial of the manifest in manifest order.
std::vector<TrialResult> analyze_trials(const SessionManifest& manifest, const AnalysisConfig& cfg = {},
                                        double sample_rate = kDefaultSampleRate);

// Participants keep their first-appearance order; stimuli ascend; occipital before ear.
std::vector<SummaryRow> summarize_trials(const std::vector<TrialResult>& trials);

struct PairedAmplitudes {
  std::vector<double> occipital;
  std::vector<double> ear;
  std::vector<std::string> participant;  // owner of each pair
};

using AmplitudeDataset = std::map<double, PairedAmplitudes>;

// Per-segment maximum DFT magnitude inside the filter passband for the
// occipital average and the ear channel, normalised to [0, 1] per participant
// and role across that participant's whole session, then pooled per stimulus.
AmplitudeDataset amplitude_dataset(const SessionManifest& manifest, const AnalysisConfig& cfg = {},
                                   double sample_rate = kDefaultSampleRate);

struct FrequencyCorrelation {
  double stimulus_hz{0.0};
  CorrelationResult result;
};

std::vector<FrequencyCorrelation> correlate(const AmplitudeDataset& data);

}  // namespace ssvep
