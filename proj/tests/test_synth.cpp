#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssvep/error.hpp"
#include "ssvep/fft.hpp"
#include "ssvep/spectral.hpp"
#include "ssvep/synth.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <set>

using namespace ssvep;

TEST_CASE("flicker_waveform closed forms") {
  CHECK(flicker_waveform(1, 0.5, 10, 1) == std::vector<double>{1, 1, 1, 1, 1, 0, 0, 0, 0, 0});
  CHECK(flicker_waveform(1, 0.25, 8, 1) == std::vector<double>{1, 1, 0, 0, 0, 0, 0, 0});
  const auto w = flicker_waveform(7, 0.5, 250, 30);
  const double mean = std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
  CHECK(std::abs(mean - 0.5) <= 1.0 / (30 * 7));
  CHECK_THROWS_AS(flicker_waveform(7, 0.0, 250, 1), Error);
  CHECK_THROWS_AS(flicker_waveform(7, 1.5, 250, 1), Error);
}

TEST_CASE("noise-free trial is a pure sinusoid at the stimulus") {
  SynthConfig c;
  c.stimulus_hz = 11.0;
  c.noise_uV = 0.0;
  c.harmonic_gains.clear();
  const Recording r = generate_trial(c);
  CHECK(r.duration_samples() == 7500);
  for (const char* id : {"o1", "o2", "ear"}) {
    const auto x = r.channel(id);
    const auto s = dft_magnitude(x, 250, 7500);
    const auto k = static_cast<std::size_t>(std::max_element(s.magnitudes.begin(), s.magnitudes.end()) -
                                            s.magnitudes.begin());
    CHECK(s.freqs[k] == doctest::Approx(11.0));
  }
  const auto o1 = r.channel("o1");
  const auto ear = r.channel("ear");
  for (std::size_t i = 0; i < 100; ++i) CHECK(ear[i] == doctest::Approx(0.8 * o1[i]).epsilon(1e-12));
}

TEST_CASE("generate_trial determinism and seed separation") {
  SynthConfig a;
  CHECK(generate_trial(a) == generate_trial(a));
  SynthConfig b = a;
  b.seed = 2;
  const Recording ra = generate_trial(a), rb = generate_trial(b);
  CHECK_FALSE(ra == rb);
  // subtracting the deterministic component isolates the noise, which differs
  const auto sig = ssvep_component(a);
  for (const char* id : {"o1", "o2"}) {
    const auto xa = ra.channel(id), xb = rb.channel(id);
    double diff = 0, na = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      diff += std::abs((xa[i] - sig[i]) - (xb[i] - sig[i]));
      na += std::abs(xa[i] - sig[i]);
    }
    CHECK(diff > 0.1 * na);
  }
  // noise channels are independent streams
  const auto o1 = ra.channel("o1"), o2 = ra.channel("o2");
  double dot = 0, n1 = 0, n2 = 0;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const double u = o1[i] - sig[i], v = o2[i] - sig[i];
    dot += u * v;
    n1 += u * u;
    n2 += v * v;
  }
  CHECK(std::abs(dot / std::sqrt(n1 * n2)) < 0.1);
  SynthConfig alias;
  alias.stimulus_hz = 120;
  CHECK_THROWS_AS(generate_trial(alias), Error);
}

TEST_CASE("pink_noise") {
  const auto z = pink_noise(1000, 250, 0.0, 1);
  CHECK(std::all_of(z.begin(), z.end(), [](double v) { return v == 0.0; }));
  CHECK(pink_noise(512, 250, 2.0, 9) == pink_noise(512, 250, 2.0, 9));
  const auto x = pink_noise(4096, 250, 3.0, 4);
  double ss = 0;
  for (double v : x) ss += v * v;
  CHECK(std::sqrt(ss / 4096.0) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK_THROWS_AS(pink_noise(4, 250, 1.0, 1), Error);
}

TEST_CASE("pink noise has a -1 log-log power slope") {
  // Welch-style average: 16 non-overlapping 1024-sample segments per seed, 50 seeds
  const std::size_t n = 1 << 14, seg = 1024;
  const double fs = 250;
  std::vector<double> avg(seg / 2 + 1, 0.0);
  RealFft fft(seg);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto x = pink_noise(n, fs, 1.0, seed);
    for (std::size_t s = 0; s + seg <= n; s += seg) {
      const auto bins = fft.forward(std::span<const double>(x).subspan(s, seg));
      for (std::size_t k = 0; k < avg.size(); ++k) avg[k] += std::norm(bins[k]);
    }
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
  for (std::size_t k = 1; k < avg.size(); ++k) {
    const double hz = static_cast<double>(k) * fs / seg;
    if (hz < 2.0 || hz > 100.0) continue;
    const double lx = std::log10(hz), ly = std::log10(avg[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    m += 1;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.2));
  CHECK(std::abs(slope + 1.0) < 0.2);
}

TEST_CASE("plan_session layout") {
  SessionLayout layout;
  const auto plan = plan_session(layout, SynthConfig{}, 42);
  CHECK(plan.size() == 100);
  std::set<std::string> ids;
  for (const auto& t : plan) {
    ids.insert(t.spec.trial_id);
    CHECK(t.spec.duration_s == 30.0);
    CHECK(t.cfg.fundamental_uV >= 0.5 * 8.0);
    CHECK(t.cfg.fundamental_uV <= 1.5 * 8.0);
  }
  CHECK(ids.size() == 100);
  layout.trials_per_freq = 1;
  layout.participants = 1;
  CHECK(plan_session(layout, SynthConfig{}, 42).size() == 4);
}

TEST_CASE("generate_session writes files and a manifest") {
  const auto dir = std::filesystem::temp_directory_path() / "ssvep_synth_session";
  std::filesystem::remove_all(dir);
  SessionLayout layout;
  layout.trials_per_freq = 1;
  layout.participants = 1;
  SynthConfig base;
  base.duration_s = 4;
  const auto m = generate_session(layout, base, 3, dir);
  CHECK(m.trials.size() == 4);
  const auto loaded = load_manifest(dir / "manifest.csv");
  CHECK(loaded.trials.size() == 4);
  CHECK_NOTHROW(validate_manifest(loaded));
  std::filesystem::remove_all(dir);
}
