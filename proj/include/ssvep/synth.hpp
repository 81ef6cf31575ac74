#pragma once

#include "ssvep/recording.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace ssvep {

struct SynthConfig {
  double stimulus_hz{7.0};
  double duration_s{30.0};
  double fs{kDefaultSampleRate};
  double fundamental_uV{8.0};
  std::vector<double> harmonic_gains{0.3};  // relative amplitudes at 2f, 3f, ...
  double noise_uV{5.0};                     // RMS of the 1/f background per channel
  double ear_attenuation{0.8};
  double phase_rad{0.0};
  std::uint64_t seed{1};
};

// Stimulus flicker: 1 while frac(t * f) < duty, else 0. Throws InvalidDuty
// (duty outside (0, 1)) and InvalidArgument (f >= fs / 2 or f <= 0).
std::vector<double> flicker_waveform(double f_hz, double duty, double fs, double duration_s);

// 1/f noise by spectral shaping of seeded white noise, scaled to exactly `rms`.
// Throws TooFewSamples for n < 16.
std::vector<double> pink_noise(std::size_t n, double fs, double rms, std::uint64_t seed);

// The noise-free evoked response shared by all channels (before ear attenuation).
std::vector<double> ssvep_component(const SynthConfig& cfg);

// Channels o1, o2, ear. Throws AliasingConfig or InvalidArgument.
Recording generate_trial(const SynthConfig& cfg);

struct SessionLayout {
  std::vector<double> stimulus_set{7.0, 9.0, 11.0, 13.0};
  std::size_t trials_per_freq{5};
  std::size_t participants{5};
  // Each (participant, trial) draws an amplitude gain uniform in [gain_lo, gain_hi].
  double gain_lo{0.5};
  double gain_hi{1.5};
};

struct GeneratedTrial {
  TrialSpec spec;
  SynthConfig cfg;
};

// Per-trial configurations in manifest order, seeds derived from `seed`.
std::vector<GeneratedTrial> plan_session(const SessionLayout& layout, const SynthConfig& base, std::uint64_t seed);

// Writes one recording per trial plus manifest.csv into `out_dir`.
// Throws IoFailure.
SessionManifest generate_session(const SessionLayout& layout, const SynthConfig& base, std::uint64_t seed,
                                 const std::filesystem::path& out_dir);

}  // namespace ssvep
