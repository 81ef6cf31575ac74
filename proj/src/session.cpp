#include "ssvep/session.hpp"

#include "ssvep/error.hpp"

#include <algorithm>

namespace ssvep {

std::string_view role_name(ChannelRole role) { return role == ChannelRole::Occipital ? "occipital" : "ear"; }

std::vector<TrialResult> analyze_trials(const SessionManifest& manifest, const AnalysisConfig& cfg,
                                        double sample_rate) {
  std::vector<TrialResult> out;
  out.reserve(manifest.trials.size());
  for (const auto& t : manifest.trials) {
    const Recording trial = slice_trial(load_recording(manifest.resolve(t), sample_rate), t);
    out.push_back({t, trial_metrics(trial, manifest.channel_roles, manifest.stimulus_set, t.stimulus_hz, cfg)});
  }
  return out;
}

std::vector<SummaryRow> summarize_trials(const std::vector<TrialResult>& trials) {
  std::vector<std::string> participants;
  for (const auto& t : trials) {
    if (std::find(participants.begin(), participants.end(), t.spec.participant) == participants.end()) {
      participants.push_back(t.spec.participant);
    }
  }
  auto rank = [&](const std::string& p) {
    return std::find(participants.begin(), participants.end(), p) - participants.begin();
  };

  std::vector<SummaryRow> rows;
  for (const auto& t : trials) {
    for (const auto& rm : t.roles) {
      auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& r) {
        return r.participant == t.spec.participant && r.stimulus_hz == t.spec.stimulus_hz && r.role == rm.role;
      });
      if (it == rows.end()) {
        rows.push_back(SummaryRow{t.spec.participant, t.spec.stimulus_hz, rm.role});
        it = rows.end() - 1;
      }
      it->peak_hz += rm.metrics.peak_hz;
      it->snr_db += rm.metrics.snr_db;
      it->bandwidth_hz += rm.metrics.bandwidth_hz;
      it->n_clipped += rm.metrics.bandwidth_clipped ? 1 : 0;
      ++it->n_trials;
    }
  }
  for (auto& r : rows) {
    const auto n = static_cast<double>(r.n_trials);
    r.peak_hz /= n;
    r.snr_db /= n;
    r.bandwidth_hz /= n;
  }
  std::stable_sort(rows.begin(), rows.end(), [&](const SummaryRow& a, const SummaryRow& b) {
    if (a.participant != b.participant) return rank(a.participant) < rank(b.participant);
    if (a.stimulus_hz != b.stimulus_hz) return a.stimulus_hz < b.stimulus_hz;
    return a.role == ChannelRole::Occipital && b.role == ChannelRole::Ear;
  });
  return rows;
}

namespace {

double band_max(const SegmentSpectrum& spec, double lo, double hi) {
  double best = 0.0;
  for (std::size_t k = 0; k < spec.freqs.size(); ++k) {
    if (spec.freqs[k] >= lo && spec.freqs[k] <= hi) best = std::max(best, spec.magnitudes[k]);
  }
  return best;
}

struct RawAmplitude {
  std::string participant;
  double stimulus_hz;
  double occipital;
  double ear;
};

}  // namespace

AmplitudeDataset amplitude_dataset(const SessionManifest& manifest, const AnalysisConfig& cfg, double sample_rate) {
  const auto occipital_ids = manifest.occipital_channels();
  const std::string ear_id = manifest.ear_channel();
  const double lo = cfg.filter.design.pass_lo_hz;
  const double hi = cfg.filter.design.pass_hi_hz;

  std::vector<RawAmplitude> raw;
  for (const auto& t : manifest.trials) {
    const Recording trial = slice_trial(load_recording(manifest.resolve(t), sample_rate), t);
    std::vector<Channel> filtered;
    for (const auto& id : occipital_ids) filtered.push_back({id, filter_series(cfg, trial.channel(id))});
    const std::vector<double> occ_avg = average_channels(Recording(trial.sample_rate(), std::move(filtered)),
                                                         occipital_ids);
    const std::vector<double> ear = filter_series(cfg, trial.channel(ear_id));

    const auto occ_segments = segment_series(occ_avg, trial.sample_rate(), cfg.segment_s);
    const auto ear_segments = segment_series(ear, trial.sample_rate(), cfg.segment_s);
    for (std::size_t s = 0; s < occ_segments.size(); ++s) {
      const auto& seg_o = occ_segments[s];
      const auto& seg_e = ear_segments[s];
      raw.push_back({t.participant, t.stimulus_hz,
                     band_max(dft_magnitude(seg_o, trial.sample_rate(), seg_o.size()), lo, hi),
                     band_max(dft_magnitude(seg_e, trial.sample_rate(), seg_e.size()), lo, hi)});
    }
  }

  // Normalise per participant and role over the participant's full dataset.
  std::map<std::string, std::vector<std::size_t>> by_participant;
  for (std::size_t i = 0; i < raw.size(); ++i) by_participant[raw[i].participant].push_back(i);
  for (const auto& [participant, idx] : by_participant) {
    std::vector<double> occ, ear;
    for (std::size_t i : idx) {
      occ.push_back(raw[i].occipital);
      ear.push_back(raw[i].ear);
    }
    const auto occ_n = normalize_unit_interval(occ);
    const auto ear_n = normalize_unit_interval(ear);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      raw[idx[j]].occipital = occ_n[j];
      raw[idx[j]].ear = ear_n[j];
    }
  }

  AmplitudeDataset out;
  for (const auto& r : raw) {
    auto& pairs = out[r.stimulus_hz];
    pairs.occipital.push_back(r.occipital);
    pairs.ear.push_back(r.ear);
    pairs.participant.push_back(r.participant);
  }
  return out;
}

std::vector<FrequencyCorrelation> correlate(const AmplitudeDataset& data) {
  std::vector<FrequencyCorrelation> out;
  for (const auto& [hz, pairs] : data) out.push_back({hz, pearson_r(pairs.occipital, pairs.ear)});
  return out;
}

}  // namespace ssvep
