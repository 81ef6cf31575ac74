#include "ssvep/cli.hpp"

#include "ssvep/csv.hpp"
#include "ssvep/detector.hpp"
#include "ssvep/error.hpp"
#include "ssvep/filters.hpp"
#include "ssvep/report.hpp"
#include "ssvep/session.hpp"
#include "ssvep/spectral.hpp"
#include "ssvep/synth.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <ostream>

namespace ssvep::cli {

namespace {

using csv::fmt;

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + fmt(v[i]);
  return out;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  if (csv::trim(text).empty()) return out;
  for (auto field : csv::split(text)) {
    auto v = csv::parse_double(field);
    if (!v) throw CLI::ValidationError(flag, "expected comma-separated numbers, got '" + text + "'");
    out.push_back(*v);
  }
  return out;
}

std::pair<double, double> parse_range(const std::string& text, const std::string& flag) {
  const auto parts = csv::split(text, ':');
  if (parts.size() == 2) {
    auto lo = csv::parse_double(parts[0]);
    auto hi = csv::parse_double(parts[1]);
    if (lo && hi) return {*lo, *hi};
  }
  throw CLI::ValidationError(flag, "expected LO:HI, got '" + text + "'");
}

std::string range_text(double lo, double hi) { return fmt(lo) + ":" + fmt(hi); }

// Raw option text for fields given as LO:HI or lists; resolved after parsing.
struct RawOptions {
  std::string freqs;
  std::string pass;
  std::string stop;
  std::string band;
  std::string harmonics{"0.3"};
  std::string gain_range{"0.5:1.5"};
};

FilterCoefficients analysis_filter(const RunConfig& cfg) {
  return design_elliptic_bandpass_by_order(cfg.filter_order, cfg.pass_lo_hz, cfg.pass_hi_hz, cfg.ripple_db,
                                           cfg.atten_db, cfg.fs);
}

AnalysisConfig analysis_config(const RunConfig& cfg) {
  AnalysisConfig a;
  a.filter = analysis_filter(cfg);
  a.zero_phase = cfg.zero_phase;
  a.pad_factor = cfg.pad_factor;
  a.segment_s = cfg.segment_s;
  if (cfg.readout == "nearest") {
    a.readout = SnrReadout::NearestBin;
  } else if (cfg.readout == "local") {
    a.readout = SnrReadout::LocalPeak;
  } else {
    throw CLI::ValidationError("--readout", "must be 'nearest' or 'local'");
  }
  return a;
}

DetectorConfig detector_config(const RunConfig& cfg, const std::vector<double>& stimuli) {
  DetectorConfig d;
  d.stimulus_set = stimuli;
  d.min_margin_db = cfg.detector_margin_db;
  d.window_s = cfg.detector_window_s;
  d.hop_s = cfg.detector_hop_s;
  d.analysis = analysis_config(cfg);
  return d;
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    csv::write_file(path, text);
  }
}

void add_filter_options(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  sub->add_option("--fs", cfg.fs, "Sample rate (Hz)")->capture_default_str();
  sub->add_option("--order", cfg.filter_order, "Bandpass filter order (even)")->capture_default_str();
  sub->add_option("--pass", raw.pass, "Passband edges LO:HI (Hz)")->default_str("6:14");
  sub->add_option("--ripple-db", cfg.ripple_db, "Passband ripple (dB)")->capture_default_str();
  sub->add_option("--atten-db", cfg.atten_db, "Stopband attenuation (dB)")->capture_default_str();
  sub->add_flag("--zero-phase", cfg.zero_phase, "Forward-backward filtering instead of causal");
}

void add_analysis_options(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  add_filter_options(sub, cfg, raw);
  sub->add_option("--readout", cfg.readout, "SNR magnitude readout: nearest | local")->capture_default_str();
  sub->add_option("--pad-factor", cfg.pad_factor, "Zero-pad to next power of two >= factor x length")
      ->capture_default_str();
  sub->add_option("--segment", cfg.segment_s, "Amplitude segment length (s)")->capture_default_str();
}

void resolve(RunConfig& cfg, const RawOptions& raw) {
  if (!raw.pass.empty()) std::tie(cfg.pass_lo_hz, cfg.pass_hi_hz) = parse_range(raw.pass, "--pass");
  if (!raw.stop.empty()) std::tie(cfg.stop_lo_hz, cfg.stop_hi_hz) = parse_range(raw.stop, "--stop");
  if (!raw.band.empty()) std::tie(cfg.spectrogram_lo_hz, cfg.spectrogram_hi_hz) = parse_range(raw.band, "--band");
  if (!raw.freqs.empty()) cfg.stimulus_set = parse_list(raw.freqs, "--freqs");
}

std::uint64_t env_seed() {
  if (const char* s = std::getenv("SSVEP_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return 42;
}

// ---------------------------------------------------------------------------

struct Paths {
  std::string manifest;
  std::string out;
  std::string report;
  std::string trials;
  std::string trial;
  std::string channel;
  std::string input;
  std::string coeffs;
  std::string response;
  std::string boxplot;
  std::string scatter;
  std::string waveform;
  bool svg{false};
  bool strict{false};
  bool realtime{false};
  bool dump_config{false};
  std::size_t points{1024};
  double start_s{0.0};
  double excerpt_start_s{10.0};
  std::size_t trials_per_freq{5};
  std::size_t participants{5};
  double amplitude_uV{SynthConfig{}.fundamental_uV};
  double noise_uV{SynthConfig{}.noise_uV};
  double ear_attenuation{SynthConfig{}.ear_attenuation};
};

int cmd_synth(const RunConfig& cfg, const RawOptions& raw, const Paths& p, std::ostream& out) {
  SessionLayout layout;
  layout.stimulus_set = cfg.stimulus_set;
  layout.trials_per_freq = p.trials_per_freq;
  layout.participants = p.participants;
  std::tie(layout.gain_lo, layout.gain_hi) = parse_range(raw.gain_range, "--gain-range");
  SynthConfig base;
  base.duration_s = cfg.trial_s;
  base.fs = cfg.fs;
  base.fundamental_uV = p.amplitude_uV;
  base.noise_uV = p.noise_uV;
  base.ear_attenuation = p.ear_attenuation;
  base.harmonic_gains = parse_list(raw.harmonics, "--harmonics");
  const auto manifest = generate_session(layout, base, cfg.seed, p.out);
  out << (std::filesystem::path(p.out) / "manifest.csv").string() << '\n';
  (void)manifest;
  return 0;
}

int cmd_filter(const RunConfig& cfg, const Paths& p, std::ostream& out, std::ostream& err) {
  FilterDesign wanted{cfg.filter_order, cfg.pass_lo_hz, cfg.pass_hi_hz, cfg.stop_lo_hz, cfg.stop_hi_hz,
                      cfg.ripple_db,    cfg.atten_db,   cfg.fs};
  const FilterCoefficients f = p.strict ? design_elliptic_bandpass(wanted) : analysis_filter(cfg);
  const int needed = minimum_elliptic_order(wanted);
  err << "elliptic bandpass order " << f.design.order << ", pass " << range_text(cfg.pass_lo_hz, cfg.pass_hi_hz)
      << " Hz, ripple " << fmt(cfg.ripple_db) << " dB, " << fmt(cfg.atten_db) << " dB reached beyond "
      << range_text(f.design.stop_lo_hz, f.design.stop_hi_hz) << " Hz\n";
  if (needed > cfg.filter_order) {
    err << "note: stop edges " << range_text(cfg.stop_lo_hz, cfg.stop_hi_hz) << " Hz at " << fmt(cfg.atten_db)
        << " dB need order " << needed << "\n";
  }

  write_or_print(p.coeffs, report::coefficients_csv(f), out);
  if (!p.response.empty()) csv::write_file(p.response, report::response_csv(f, p.points));
  if (!p.input.empty()) {
    const Recording rec = load_recording(p.input, cfg.fs);
    std::vector<Channel> channels;
    for (const auto& ch : rec.channels()) {
      channels.push_back(
          {ch.id, cfg.zero_phase ? apply_filter_zero_phase(f, ch.samples_uV) : apply_filter(f, ch.samples_uV)});
    }
    const Recording filtered(rec.sample_rate(), std::move(channels));
    if (p.out.empty()) throw CLI::ValidationError("--out", "required with --input");
    write_recording(p.out, filtered);
  }
  return 0;
}

int cmd_analyze(const RunConfig& cfg, const Paths& p, std::ostream& out) {
  if (p.dump_config) {
    out << dump(cfg);
    return 0;
  }
  if (p.manifest.empty()) throw CLI::ValidationError("--manifest", "required");
  const SessionManifest manifest = load_manifest(p.manifest);
  const auto trials = analyze_trials(manifest, analysis_config(cfg), cfg.fs);
  write_or_print(p.report, report::summary_csv(summarize_trials(trials)), out);
  if (!p.trials.empty()) csv::write_file(p.trials, report::trials_csv(trials));
  return 0;
}

Recording load_trial(const SessionManifest& m, const std::string& trial_id, double fs) {
  const TrialSpec& t = m.trial(trial_id);
  return slice_trial(load_recording(m.resolve(t), fs), t);
}

int cmd_spectrogram(const RunConfig& cfg, const Paths& p, std::ostream& out) {
  const SessionManifest m = load_manifest(p.manifest);
  const Recording trial = load_trial(m, p.trial, cfg.fs);
  const auto occ = average_channels(trial, m.occipital_channels());
  const auto ear = trial.channel(m.ear_channel());
  const auto g_occ = spectrogram(occ, trial.sample_rate(), cfg.spectrogram_window_s, cfg.spectrogram_overlap,
                                 cfg.spectrogram_lo_hz, cfg.spectrogram_hi_hz);
  const auto g_ear = spectrogram(ear, trial.sample_rate(), cfg.spectrogram_window_s, cfg.spectrogram_overlap,
                                 cfg.spectrogram_lo_hz, cfg.spectrogram_hi_hz);
  const std::string text = report::spectrogram_csv(g_occ, g_ear);
  if (p.out.empty() || p.out == "-") {
    out << text;
  } else {
    report::emit(p.out, text, p.svg ? report::spectrogram_svg(g_occ, "Occipital spectrogram " + p.trial) : "");
    if (p.svg) {
      auto ear_svg = std::filesystem::path(p.out);
      ear_svg.replace_extension(".ear.svg");
      csv::write_file(ear_svg.string(), report::spectrogram_svg(g_ear, "Ear spectrogram " + p.trial));
    }
  }
  return 0;
}

int cmd_correlate(const RunConfig& cfg, const Paths& p, std::ostream& out) {
  const SessionManifest m = load_manifest(p.manifest);
  const auto data = amplitude_dataset(m, analysis_config(cfg), cfg.fs);
  write_or_print(p.out, report::correlation_csv(correlate(data)), out);
  return 0;
}

int cmd_report(const RunConfig& cfg, const Paths& p) {
  const SessionManifest m = load_manifest(p.manifest);
  if (p.boxplot.empty() && p.scatter.empty() && p.waveform.empty()) {
    throw CLI::ValidationError("report", "choose at least one of --boxplot, --scatter, --waveform");
  }
  if (!p.boxplot.empty() || !p.scatter.empty()) {
    const auto data = amplitude_dataset(m, analysis_config(cfg), cfg.fs);
    if (!p.boxplot.empty()) {
      report::emit(p.boxplot, report::boxplot_csv(data), p.svg ? report::boxplot_svg(data) : "");
    }
    if (!p.scatter.empty()) {
      report::emit(p.scatter, report::scatter_csv(data), p.svg ? report::scatter_svg(data) : "");
    }
  }
  if (!p.waveform.empty()) {
    if (p.trial.empty()) throw CLI::ValidationError("--trial", "required with --waveform");
    const Recording trial = load_trial(m, p.trial, cfg.fs);
    const FilterCoefficients f = display_filter(trial.sample_rate());
    auto run_filter = [&](std::span<const double> x) {
      return cfg.zero_phase ? apply_filter_zero_phase(f, x) : apply_filter(f, x);
    };
    std::vector<Channel> filtered;
    for (const auto& id : m.occipital_channels()) filtered.push_back({id, run_filter(trial.channel(id))});
    const auto occ = average_channels(Recording(trial.sample_rate(), std::move(filtered)), m.occipital_channels());
    const auto ear = run_filter(trial.channel(m.ear_channel()));

    const std::size_t len = samples_for_seconds(1.0, trial.sample_rate());
    if (trial.duration_samples() < len) throw Error(Errc::MissingAnalysis, "trial shorter than 1 s");
    const std::size_t first = std::min(samples_for_seconds(p.excerpt_start_s, trial.sample_rate()),
                                       trial.duration_samples() - len);
    report::Waveform w;
    for (std::size_t i = first; i < first + len; ++i) {
      w.times_s.push_back(static_cast<double>(i) / trial.sample_rate());
      w.occipital.push_back(occ[i]);
      w.ear.push_back(ear[i]);
    }
    report::emit(p.waveform, report::waveform_csv(w), p.svg ? report::waveform_svg(w) : "");
  }
  return 0;
}

std::vector<double> detector_series(const SessionManifest& m, const Paths& p, double fs, Recording& holder) {
  if (!p.input.empty()) {
    holder = load_recording(p.input, fs);
  } else {
    if (p.manifest.empty() || p.trial.empty()) {
      throw CLI::ValidationError("--manifest/--trial", "give --input or both --manifest and --trial");
    }
    holder = load_trial(m, p.trial, fs);
  }
  const std::string channel = p.channel.empty() ? (p.input.empty() ? m.ear_channel() : "ear") : p.channel;
  const auto s = holder.channel(channel);
  return {s.begin(), s.end()};
}

int cmd_classify(const RunConfig& cfg, const Paths& p, std::ostream& out) {
  const SessionManifest m = p.manifest.empty() ? SessionManifest{} : load_manifest(p.manifest);
  Recording holder;
  const auto x = detector_series(m, p, cfg.fs, holder);
  const auto stimuli = p.manifest.empty() ? cfg.stimulus_set : m.stimulus_set;
  const DetectorConfig d = detector_config(cfg, stimuli);
  const std::size_t first = samples_for_seconds(p.start_s, holder.sample_rate());
  const std::size_t len = samples_for_seconds(d.window_s, holder.sample_rate());
  if (first + len > x.size()) throw Error(Errc::WindowOutOfRange, "classification window exceeds the recording");
  Decision dec = classify_window(std::span<const double>(x).subspan(first, len), holder.sample_rate(), d);
  dec.window_start_s = static_cast<double>(first) / holder.sample_rate();
  out << report::decision_header(stimuli) << '\n' << report::decision_line(dec, stimuli) << '\n';
  return 0;
}

int cmd_stream(const RunConfig& cfg, const Paths& p, std::ostream& out) {
  const SessionManifest m = p.manifest.empty() ? SessionManifest{} : load_manifest(p.manifest);
  Recording holder;
  const auto x = detector_series(m, p, cfg.fs, holder);
  const auto stimuli = p.manifest.empty() ? cfg.stimulus_set : m.stimulus_set;
  const DetectorConfig d = detector_config(cfg, stimuli);
  const Recording single(holder.sample_rate(), {{"x", x}});
  ReplayStream source = replay_stream(single, "x", p.realtime);
  StreamDetector detector(source.sample_rate(), d);
  out << report::decision_header(stimuli) << '\n';
  while (auto sample = source.next()) {
    if (auto dec = detector.push(*sample)) out << report::decision_line(*dec, stimuli) << '\n' << std::flush;
  }
  return 0;
}

}  // namespace

std::string dump(const RunConfig& c) {
  std::string s;
  auto line = [&](const std::string& k, const std::string& v) { s += k + "=" + v + "\n"; };
  line("fs", fmt(c.fs));
  line("stimulus_set", join(c.stimulus_set));
  line("filter.family", "elliptic");
  line("filter.order", std::to_string(c.filter_order));
  line("filter.pass_hz", range_text(c.pass_lo_hz, c.pass_hi_hz));
  line("filter.stop_hz", range_text(c.stop_lo_hz, c.stop_hi_hz));
  line("filter.ripple_db", fmt(c.ripple_db));
  line("filter.atten_db", fmt(c.atten_db));
  line("filter.zero_phase", c.zero_phase ? "true" : "false");
  line("segment_s", fmt(c.segment_s));
  line("trial_s", fmt(c.trial_s));
  line("pad_factor", std::to_string(c.pad_factor));
  line("snr.readout", c.readout);
  line("spectrogram.window_s", fmt(c.spectrogram_window_s));
  line("spectrogram.overlap", fmt(c.spectrogram_overlap));
  line("spectrogram.band_hz", range_text(c.spectrogram_lo_hz, c.spectrogram_hi_hz));
  line("detector.window_s", fmt(c.detector_window_s));
  line("detector.hop_s", fmt(c.detector_hop_s));
  line("detector.margin_db", fmt(c.detector_margin_db));
  line("seed", std::to_string(c.seed));
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.seed = env_seed();
  RawOptions raw;
  Paths p;

  CLI::App app{"SSVEP analysis toolkit: synthetic sessions, elliptic filtering, spectral metrics, detection"};
  app.name("ssvep");
  app.require_subcommand(1);

  auto* synth = app.add_subcommand("synth", "Generate a synthetic session (recordings + manifest)");
  synth->add_option("--freqs", raw.freqs, "Stimulus frequencies (Hz), comma separated")->default_str("7,9,11,13");
  synth->add_option("--trials", p.trials_per_freq, "Trials per frequency")->capture_default_str();
  synth->add_option("--participants", p.participants, "Participants")->capture_default_str();
  synth->add_option("--duration", cfg.trial_s, "Trial duration (s)")->capture_default_str();
  synth->add_option("--fs", cfg.fs, "Sample rate (Hz)")->capture_default_str();
  synth->add_option("--seed", cfg.seed, "Session seed (default $SSVEP_SEED or 42)");
  synth->add_option("--out", p.out, "Output directory")->required();
  synth->add_option("--amplitude", p.amplitude_uV, "Fundamental amplitude (uV)")->capture_default_str();
  synth->add_option("--noise", p.noise_uV, "1/f background RMS (uV)")->capture_default_str();
  synth->add_option("--ear-attenuation", p.ear_attenuation, "Ear/occipital signal ratio")->capture_default_str();
  synth->add_option("--harmonics", raw.harmonics, "Relative harmonic gains at 2f,3f,...")->capture_default_str();
  synth->add_option("--gain-range", raw.gain_range, "Per-trial amplitude gain LO:HI")->capture_default_str();

  auto* filter = app.add_subcommand("filter", "Design the elliptic bandpass; dump coefficients or filter a file");
  add_filter_options(filter, cfg, raw);
  filter->add_option("--stop", raw.stop, "Stopband edges LO:HI (Hz)")->default_str("5:15");
  filter->add_flag("--strict", p.strict, "Fail unless the order meets the attenuation at the stop edges");
  filter->add_option("--coeffs", p.coeffs, "Write sections CSV here (default stdout)");
  filter->add_option("--response", p.response, "Write magnitude/phase response CSV here");
  filter->add_option("--points", p.points, "Response grid points")->capture_default_str();
  filter->add_option("--input", p.input, "Recording CSV to filter");
  filter->add_option("--out", p.out, "Filtered recording CSV");

  auto* analyze = app.add_subcommand("analyze", "Peak frequency, SNR and -3 dB bandwidth per participant/stimulus");
  analyze->add_option("--manifest", p.manifest, "Session manifest CSV");
  analyze->add_option("--report", p.report, "Summary CSV (default stdout)");
  analyze->add_option("--trials", p.trials, "Per-trial metrics CSV");
  analyze->add_flag("--dump-config", p.dump_config, "Print the resolved parameters and exit");
  add_analysis_options(analyze, cfg, raw);

  auto* spec = app.add_subcommand("spectrogram", "Hann short-time spectra of one trial");
  spec->add_option("--manifest", p.manifest, "Session manifest CSV")->required();
  spec->add_option("--trial", p.trial, "Trial id")->required();
  spec->add_option("--band", raw.band, "Frequency band LO:HI (Hz)")->default_str("5:40");
  spec->add_option("--window", cfg.spectrogram_window_s, "Window length (s)")->capture_default_str();
  spec->add_option("--overlap", cfg.spectrogram_overlap, "Window overlap fraction")->capture_default_str();
  spec->add_option("--fs", cfg.fs, "Sample rate (Hz)")->capture_default_str();
  spec->add_option("--out", p.out, "Grid CSV (default stdout)");
  spec->add_flag("--svg", p.svg, "Also write SVG previews");

  auto* corr = app.add_subcommand("correlate", "Pearson r between occipital and ear segment amplitudes");
  corr->add_option("--manifest", p.manifest, "Session manifest CSV")->required();
  corr->add_option("--out", p.out, "Correlation CSV (default stdout)");
  add_analysis_options(corr, cfg, raw);

  auto* rep = app.add_subcommand("report", "Plot data: box plot, scatter and waveform CSVs");
  rep->add_option("--manifest", p.manifest, "Session manifest CSV")->required();
  rep->add_option("--boxplot", p.boxplot, "Box plot summary CSV");
  rep->add_option("--scatter", p.scatter, "Paired amplitude CSV");
  rep->add_option("--waveform", p.waveform, "1 s display-filtered waveform CSV");
  rep->add_option("--trial", p.trial, "Trial id for --waveform");
  rep->add_option("--excerpt-start", p.excerpt_start_s, "Waveform excerpt start (s)")->capture_default_str();
  rep->add_flag("--svg", p.svg, "Also write SVG previews");
  add_analysis_options(rep, cfg, raw);

  auto add_detector_options = [&](CLI::App* sub) {
    sub->add_option("--manifest", p.manifest, "Session manifest CSV");
    sub->add_option("--trial", p.trial, "Trial id");
    sub->add_option("--input", p.input, "Recording CSV instead of a manifest trial");
    sub->add_option("--channel", p.channel, "Channel id (default: the ear channel)");
    sub->add_option("--window", cfg.detector_window_s, "Window length (s)")->capture_default_str();
    sub->add_option("--margin-db", cfg.detector_margin_db, "Minimum best-vs-second margin (dB)")
        ->capture_default_str();
    sub->add_option("--freqs", raw.freqs, "Candidate frequencies without a manifest")->default_str("7,9,11,13");
    add_analysis_options(sub, cfg, raw);
  };
  auto* classify = app.add_subcommand("classify", "Classify one window");
  add_detector_options(classify);
  classify->add_option("--start", p.start_s, "Window start (s)")->capture_default_str();

  auto* stream = app.add_subcommand("stream", "Sliding-window detection over a replayed stream");
  add_detector_options(stream);
  stream->add_option("--hop", cfg.detector_hop_s, "Hop (s)")->capture_default_str();
  stream->add_flag("--realtime", p.realtime, "Pace samples at 1/fs");

  try {
    app.parse(argc, argv);
    resolve(cfg, raw);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*synth) return cmd_synth(cfg, raw, p, out);
    if (*filter) return cmd_filter(cfg, p, out, err);
    if (*analyze) return cmd_analyze(cfg, p, out);
    if (*spec) return cmd_spectrogram(cfg, p, out);
    if (*corr) return cmd_correlate(cfg, p, out);
    if (*rep) return cmd_report(cfg, p);
    if (*classify) return cmd_classify(cfg, p, out);
    if (*stream) return cmd_stream(cfg, p, out);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ssvep"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ssvep::cli
