// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "oracles.hpp"
#include "ssvep/cli.hpp"
#include "ssvep/csv.hpp"
#include "ssvep/detector.hpp"
#include "ssvep/filters.hpp"
#include "ssvep/random.hpp"
#include "ssvep/session.hpp"
#include "ssvep/spectral.hpp"
#include "ssvep/stats.hpp"
#include "ssvep/synth.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

using namespace ssvep;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v, int sig = 4) { return csv::fmt(v, sig); }

double db(std::complex<double> h) { return 20.0 * std::log10(std::abs(h)); }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("ssvep_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const std::vector<double> kStimuli{7.0, 9.0, 11.0, 13.0};

// 1 -------------------------------------------------------------------------
Outcome filter_compliance() {
  const auto f = default_analysis_filter(250.0);
  const oracle::TransferFunction tf(f);
  double pass_min = 0.0, pass_max = -1e9, stop_max = -1e9, stop_at = 0.0;
  for (int i = 0; i < 1024; ++i) {
    const double hz = 125.0 * i / 1023.0;
    const double g = db(tf.at(hz, 250.0));
    if (hz >= 6.0 && hz <= 14.0) {
      pass_min = std::min(pass_min, g);
      pass_max = std::max(pass_max, g);
    }
    if (hz < 5.0 || hz > 15.0) {
      if (g > stop_max) {
        stop_max = g;
        stop_at = hz;
      }
    }
  }
  const bool pass_ok = pass_min >= -1.0 - 1e-9 && pass_max <= 1e-9;
  const bool stop_ok = stop_max <= -40.0 + 1e-9;
  FilterDesign want;
  std::string detail = "order " + std::to_string(f.design.order) + ": passband [" + num(pass_min) + ", " +
                       num(pass_max) + "] dB, worst stopband " + num(stop_max) + " dB at " + num(stop_at) +
                       " Hz; the 5/15 Hz edges need order " + std::to_string(minimum_elliptic_order(want));
  return {pass_ok && stop_ok, detail};
}

// 2 -------------------------------------------------------------------------
Outcome claim_suite() {
  std::size_t total = 0, ok = 0;
  double worst_peak = 0.0, min_snr = 1e9, max_bw = 0.0;
  const AnalysisConfig cfg;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (const auto& t : plan_session(SessionLayout{}, SynthConfig{}, seed)) {
      const Recording rec = generate_trial(t.cfg);
      const SessionManifest roles;
      for (const auto& rm : trial_metrics(rec, roles.channel_roles, kStimuli, t.cfg.stimulus_hz, cfg)) {
        const auto& m = rm.metrics;
        ++total;
        worst_peak = std::max(worst_peak, std::abs(m.peak_hz - t.cfg.stimulus_hz));
        min_snr = std::min(min_snr, m.snr_db);
        max_bw = std::max(max_bw, m.bandwidth_hz);
        if (std::abs(m.peak_hz - t.cfg.stimulus_hz) <= 0.5 && m.snr_db > 0.0 && m.bandwidth_hz < 1.0) ++ok;
      }
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " trial-roles pass; max |peak-f| " +
                           num(worst_peak) + " Hz, min SNR " + num(min_snr) + " dB, max bandwidth " + num(max_bw) +
                           " Hz"};
}

// 3 -------------------------------------------------------------------------
Outcome snr_exactness() {
  const double a = snr_db({{7, 10}, {9, 1}, {11, 1}, {13, 1}}, 7);
  double worst_equal = 0.0;
  for (double target : kStimuli) {
    worst_equal = std::max(worst_equal, std::abs(snr_db({{7, 2.5}, {9, 2.5}, {11, 2.5}, {13, 2.5}}, target)));
  }
  const bool ok = std::abs(a - 20.0) <= 1e-12 && worst_equal <= 1e-12;
  return {ok, "{10,1,1,1} -> " + num(a, 17) + " dB; all-equal worst |SNR| " + num(worst_equal) + " dB"};
}

// 4 -------------------------------------------------------------------------
Outcome dft_oracle() {
  Rng rng(404);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 8 + rng.below(1024 - 8 + 1);
    const std::size_t pad = rng.below(2) ? n : 2 * n + rng.below(64);
    std::vector<double> x(n);
    for (auto& v : x) v = rng.normal() * 10.0 + rng.uniform(-1, 1);
    const auto got = dft_magnitude(x, 250.0, pad).magnitudes;
    const auto ref = oracle::naive_dft_magnitude(x, pad);
    const double peak = *std::max_element(ref.begin(), ref.end());
    for (std::size_t k = 0; k < ref.size(); ++k) {
      worst = std::max(worst, std::abs(got[k] - ref[k]) / std::max(ref[k], 1e-9 * peak));
    }
  }
  return {worst <= 1e-6, "worst relative error " + num(worst) + " over 50 inputs"};
}

// 5 -------------------------------------------------------------------------
Outcome correlation_machinery() {
  Rng rng(505);
  std::mt19937_64 shuffler(0x5eed);
  double worst_p = 0.0, worst_affine = 0.0;
  const std::size_t n = 50;
  for (int fixture = 0; fixture < 50; ++fixture) {
    const double rho = 0.01 * fixture;  // spans p from ~1 down to ~1e-4
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.normal();
      y[i] = rho * x[i] + std::sqrt(1 - rho * rho) * rng.normal();
    }
    const auto res = pearson_r(x, y);

    // permutation oracle on centred data: only the cross term changes
    std::vector<double> xc(x), yc(y);
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      xc[i] -= mx;
      yc[i] -= my;
      sxx += xc[i] * xc[i];
      syy += yc[i] * yc[i];
    }
    const double denom = std::sqrt(sxx * syy);
    const double obs = std::abs(oracle::pearson(x, y));
    int hits = 0;
    const int draws = 100000;
    for (int d = 0; d < draws; ++d) {
      std::shuffle(yc.begin(), yc.end(), shuffler);
      double sxy = 0;
      for (std::size_t i = 0; i < n; ++i) sxy += xc[i] * yc[i];
      if (std::abs(sxy / denom) >= obs - 1e-12) ++hits;
    }
    worst_p = std::max(worst_p, std::abs(res.p_two_sided - static_cast<double>(hits) / draws));

    const double a = rng.uniform(0.01, 100), b = rng.uniform(-50, 50);
    const double c = rng.uniform(0.01, 100), d = rng.uniform(-50, 50);
    std::vector<double> xa(n), ya(n);
    for (std::size_t i = 0; i < n; ++i) {
      xa[i] = a * x[i] + b;
      ya[i] = c * y[i] + d;
    }
    worst_affine = std::max(worst_affine, std::abs(pearson_r(xa, ya).r - res.r));
  }
  return {worst_p <= 0.02 && worst_affine <= 1e-12,
          "max |p - p_perm| " + num(worst_p) + "; max affine drift in r " + num(worst_affine)};
}

// 6 -------------------------------------------------------------------------
Outcome session_correlation() {
  const auto dir = scratch("session");
  const auto manifest = generate_session(SessionLayout{}, SynthConfig{}, 42, dir);
  const auto rows = correlate(amplitude_dataset(manifest));
  bool ok = rows.size() == kStimuli.size();
  std::string detail;
  for (const auto& row : rows) {
    ok = ok && row.result.r > 0.5;
    detail += (detail.empty() ? "" : ", ") + num(row.stimulus_hz) + " Hz r=" + num(row.result.r, 3) +
              " (N=" + std::to_string(row.result.n) + ")";
  }
  fs::remove_all(dir);
  return {ok, detail};
}

// 7 -------------------------------------------------------------------------
Outcome stream_equivalence() {
  Rng rng(707);
  std::size_t identical = 0, decisions = 0;
  const DetectorConfig cfg;
  for (int i = 0; i < 20; ++i) {
    SynthConfig c;
    c.stimulus_hz = kStimuli[rng.below(kStimuli.size())];
    c.fundamental_uV = rng.uniform(2.0, 12.0);
    c.phase_rad = rng.uniform(0.0, 6.283185307179586);
    c.seed = rng.below(1u << 30);
    const Recording rec = generate_trial(c);
    const std::string channel = std::vector<std::string>{"o1", "o2", "ear"}[rng.below(3)];
    auto stream = replay_stream(rec, channel);
    const auto online = stream_detect(stream, cfg).decisions;
    const auto offline = classify_windows(rec.channel(channel), rec.sample_rate(), cfg);
    decisions += online.size();
    if (online == offline && !online.empty()) ++identical;
  }
  return {identical == 20,
          std::to_string(identical) + "/20 trials bit-identical (" + std::to_string(decisions) + " decisions)"};
}

// 8 -------------------------------------------------------------------------
Outcome detector_accuracy() {
  const DetectorConfig cfg;
  Rng rng(5);
  std::size_t correct = 0, total = 0, abstained = 0;
  std::string per;
  for (double hz : kStimuli) {
    std::size_t hit = 0;
    for (int w = 0; w < 100; ++w) {
      SynthConfig c;
      c.stimulus_hz = hz;
      c.duration_s = cfg.window_s;
      c.phase_rad = rng.uniform(0.0, 6.283185307179586);
      c.seed = mix_seed(5, static_cast<std::uint64_t>(hz) * 1000 + static_cast<std::uint64_t>(w));
      const Recording rec = generate_trial(c);
      const auto d = classify_window(rec.channel("ear"), rec.sample_rate(), cfg);
      if (!d.chosen_hz) ++abstained;
      if (d.chosen_hz && *d.chosen_hz == hz) ++hit;
    }
    correct += hit;
    total += 100;
    per += (per.empty() ? "" : ", ") + num(hz) + " Hz " + std::to_string(hit) + "%";
  }
  const double acc = static_cast<double>(correct) / static_cast<double>(total);
  return {acc >= 0.95, "ear-channel accuracy " + num(100 * acc) + "% (" + per + "; " + std::to_string(abstained) +
                           " abstentions)"};
}

// 9 -------------------------------------------------------------------------
Outcome determinism() {
  const auto root = scratch("determinism");
  auto pipeline = [&](const std::string& tag) {
    const auto dir = root / tag;
    const std::string d = (dir / "session").string();
    const std::string m = d + "/manifest.csv";
    std::ostringstream out, err;
    const std::vector<std::vector<std::string>> steps{
        {"synth", "--seed", "42", "--out", d},
        {"analyze", "--manifest", m, "--report", (dir / "summary.csv").string(), "--trials",
         (dir / "trials.csv").string()},
        {"correlate", "--manifest", m, "--out", (dir / "correlation.csv").string()},
        {"report", "--manifest", m, "--boxplot", (dir / "box.csv").string(), "--scatter",
         (dir / "scatter.csv").string(), "--waveform", (dir / "wave.csv").string(), "--trial", "P1_7Hz_T1", "--svg"},
        {"spectrogram", "--manifest", m, "--trial", "P1_7Hz_T1", "--out", (dir / "spec.csv").string(), "--svg"},
    };
    for (const auto& s : steps) {
      if (cli::run(s, out, err) != 0) return false;
    }
    return true;
  };
  if (!pipeline("a") || !pipeline("b")) return {false, "pipeline step failed"};
  std::size_t files = 0, same = 0;
  for (const auto& e : fs::recursive_directory_iterator(root / "a")) {
    if (!e.is_regular_file()) continue;
    ++files;
    const auto twin = root / "b" / fs::relative(e.path(), root / "a");
    if (fs::exists(twin) && csv::read_file(e.path().string()) == csv::read_file(twin.string())) ++same;
  }
  fs::remove_all(root);
  return {files > 100 && same == files, std::to_string(same) + "/" + std::to_string(files) + " files byte-identical"};
}

// 10 ------------------------------------------------------------------------
Outcome bandwidth_oracle() {
  const double fs = 250.0, T = 30.0;
  const double expected = 0.886 / T;
  const auto n = static_cast<std::size_t>(fs * T);
  double worst_rel = 0.0, worst_oracle = 0.0;
  for (double hz : {7.0, 9.0, 10.37, 11.0, 13.0}) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::sin(2 * std::numbers::pi * hz * static_cast<double>(i) / fs);
    const auto s = dft_magnitude(x, fs, 1 << 17);
    const auto bw = bandwidth_3db(s, peak_frequency(s, 6, 14));
    worst_rel = std::max(worst_rel, std::abs(bw.width_hz - expected) / expected);

    // dense DTFT oracle with bisection on each half-power crossing
    const double peak = oracle::dtft_magnitude(x, hz, fs);
    auto crossing = [&](double inside, double outside) {
      for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (inside + outside);
        (oracle::dtft_magnitude(x, mid, fs) >= peak / std::sqrt(2.0) ? inside : outside) = mid;
      }
      return 0.5 * (inside + outside);
    };
    const double width = crossing(hz, hz + 1.0 / T) - crossing(hz, hz - 1.0 / T);
    worst_oracle = std::max(worst_oracle, std::abs(bw.width_hz - width) / width);
  }
  return {worst_rel <= 0.10, "worst deviation from 0.886/T " + num(100 * worst_rel) +
                                 "%; worst deviation from dense DTFT width " + num(100 * worst_oracle) + "%"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "filter spec compliance", 1, filter_compliance},
      {2, "peak/SNR/bandwidth claims on synthetic sessions", 60, claim_suite},
      {3, "SNR exactness", 1, snr_exactness},
      {4, "DFT oracle equivalence", 30, dft_oracle},
      {5, "correlation p-value and affine invariance", 120, correlation_machinery},
      {6, "occipital/ear correlation on default session", 120, session_correlation},
      {7, "stream/offline decision equivalence", 30, stream_equivalence},
      {8, "detector accuracy on 2 s windows", 60, detector_accuracy},
      {9, "pipeline determinism", 120, determinism},
      {10, "bandwidth oracle", 5, bandwidth_oracle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2f s of %.0f s budget%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
