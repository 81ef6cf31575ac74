#include "ssvep/synth.hpp"

#include "ssvep/csv.hpp"
#include "ssvep/error.hpp"
#include "ssvep/fft.hpp"
#include "ssvep/random.hpp"

#include <cmath>
#include <numbers>

namespace ssvep {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Child-seed streams.
constexpr std::uint64_t kStreamO1 = 1;
constexpr std::uint64_t kStreamO2 = 2;
constexpr std::uint64_t kStreamEar = 3;
constexpr std::uint64_t kStreamSessionDraws = 0xC0FFEE;
}  // namespace

std::vector<double> flicker_waveform(double f_hz, double duty, double fs, double duration_s) {
  if (!(duty > 0.0 && duty < 1.0)) throw Error(Errc::InvalidDuty, "duty cycle must lie in (0, 1)");
  if (!(fs > 0.0) || !(f_hz > 0.0) || !(f_hz < fs / 2.0)) {
    throw Error(Errc::InvalidArgument, "flicker frequency must lie in (0, fs/2)");
  }
  const std::size_t n = samples_for_seconds(duration_s, fs);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double cycles = static_cast<double>(i) * f_hz / fs;
    out[i] = (cycles - std::floor(cycles)) < duty ? 1.0 : 0.0;
  }
  return out;
}

std::vector<double> pink_noise(std::size_t n, double fs, double rms, std::uint64_t seed) {
  if (n < 16) throw Error(Errc::TooFewSamples, "pink noise needs at least 16 samples");
  if (!(fs > 0.0) || rms < 0.0) throw Error(Errc::InvalidArgument, "need fs > 0 and rms >= 0");
  if (rms == 0.0) return std::vector<double>(n, 0.0);

  // White Gaussian draws in sample order, then amplitude shaping by
  // 1/sqrt(max(f, 1 Hz)) with the DC bin removed.
  Rng rng(seed);
  std::vector<double> white(n);
  for (auto& v : white) v = rng.normal();

  RealFft fft(n);
  auto bins = fft.forward(white);
  bins[0] = 0.0;
  for (std::size_t k = 1; k < bins.size(); ++k) {
    const double hz = static_cast<double>(k) * fs / static_cast<double>(n);
    bins[k] /= std::sqrt(std::max(hz, 1.0));
  }
  std::vector<double> out = fft.inverse(bins);

  double ss = 0.0;
  for (double v : out) ss += v * v;
  const double scale = rms / std::sqrt(ss / static_cast<double>(n));
  for (auto& v : out) v *= scale;
  return out;
}

namespace {

void validate(const SynthConfig& cfg) {
  if (!(cfg.fs > 0.0) || !(cfg.duration_s > 0.0) || !(cfg.stimulus_hz > 0.0)) {
    throw Error(Errc::InvalidArgument, "fs, duration and stimulus frequency must be positive");
  }
  if (cfg.noise_uV < 0.0) throw Error(Errc::InvalidArgument, "noise_uV must be >= 0");
  if (!(cfg.ear_attenuation > 0.0 && cfg.ear_attenuation <= 1.0)) {
    throw Error(Errc::InvalidArgument, "ear_attenuation must lie in (0, 1]");
  }
  const double top = cfg.stimulus_hz * static_cast<double>(1 + cfg.harmonic_gains.size());
  if (!(top < cfg.fs / 2.0)) {
    throw Error(Errc::AliasingConfig, "highest harmonic " + csv::fmt(top) + " Hz reaches fs/2");
  }
}

}  // namespace

std::vector<double> ssvep_component(const SynthConfig& cfg) {
  validate(cfg);
  const std::size_t n = samples_for_seconds(cfg.duration_s, cfg.fs);
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / cfg.fs;
    double v = std::sin(kTwoPi * cfg.stimulus_hz * t + cfg.phase_rad);
    for (std::size_t h = 0; h < cfg.harmonic_gains.size(); ++h) {
      const double mult = static_cast<double>(h + 2);
      v += cfg.harmonic_gains[h] * std::sin(kTwoPi * mult * cfg.stimulus_hz * t + mult * cfg.phase_rad);
    }
    s[i] = cfg.fundamental_uV * v;
  }
  return s;
}

Recording generate_trial(const SynthConfig& cfg) {
  const std::vector<double> signal = ssvep_component(cfg);
  const std::size_t n = signal.size();
  auto noise = [&](std::uint64_t stream) {
    if (cfg.noise_uV == 0.0) return std::vector<double>(n, 0.0);
    return pink_noise(n, cfg.fs, cfg.noise_uV, mix_seed(cfg.seed, stream));
  };

  std::vector<double> o1 = noise(kStreamO1);
  std::vector<double> o2 = noise(kStreamO2);
  std::vector<double> ear = noise(kStreamEar);
  for (std::size_t i = 0; i < n; ++i) {
    o1[i] += signal[i];
    o2[i] += signal[i];
    ear[i] += cfg.ear_attenuation * signal[i];
  }
  return Recording(cfg.fs, {{"o1", std::move(o1)}, {"o2", std::move(o2)}, {"ear", std::move(ear)}});
}

std::vector<GeneratedTrial> plan_session(const SessionLayout& layout, const SynthConfig& base, std::uint64_t seed) {
  if (layout.stimulus_set.empty() || layout.trials_per_freq < 1 || layout.participants < 1) {
    throw Error(Errc::InvalidArgument, "session needs at least one stimulus, trial and participant");
  }
  if (!(layout.gain_lo > 0.0 && layout.gain_lo <= layout.gain_hi)) {
    throw Error(Errc::InvalidArgument, "need 0 < gain_lo <= gain_hi");
  }
  Rng draws(mix_seed(seed, kStreamSessionDraws));
  std::vector<GeneratedTrial> out;
  std::uint64_t index = 0;
  for (std::size_t p = 1; p <= layout.participants; ++p) {
    for (double hz : layout.stimulus_set) {
      for (std::size_t t = 1; t <= layout.trials_per_freq; ++t, ++index) {
        GeneratedTrial g;
        g.cfg = base;
        g.cfg.stimulus_hz = hz;
        g.cfg.seed = mix_seed(seed, index);
        g.cfg.fundamental_uV = base.fundamental_uV * draws.uniform(layout.gain_lo, layout.gain_hi);
        g.cfg.phase_rad = draws.uniform(0.0, kTwoPi);
        validate(g.cfg);

        const std::string pid = "P" + std::to_string(p);
        const std::string tid = pid + "_" + csv::fmt(hz) + "Hz_T" + std::to_string(t);
        g.spec = TrialSpec{tid, pid, hz, tid + ".csv", 0.0, base.duration_s};
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

SessionManifest generate_session(const SessionLayout& layout, const SynthConfig& base, std::uint64_t seed,
                                 const std::filesystem::path& out_dir) {
  const auto plan = plan_session(layout, base, seed);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::IoFailure, "cannot create " + out_dir.string() + ": " + ec.message());

  SessionManifest manifest;
  manifest.stimulus_set = layout.stimulus_set;
  manifest.base_dir = out_dir;
  for (const auto& g : plan) {
    write_recording(out_dir / g.spec.file, generate_trial(g.cfg));
    manifest.trials.push_back(g.spec);
  }
  write_manifest(out_dir / "manifest.csv", manifest);
  return manifest;
}

}  // namespace ssvep
