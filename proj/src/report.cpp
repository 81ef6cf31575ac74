#include "ssvep/report.hpp"

#include "ssvep/csv.hpp"
#include "ssvep/error.hpp"
#include "ssvep/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ssvep::report {

using csv::fmt;

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "participant,stimulus_hz,role,peak_hz,snr_db,bandwidth_hz,n_trials,n_clipped\n";
  for (const auto& r : rows) {
    out += r.participant + ',' + fmt(r.stimulus_hz) + ',' + std::string(role_name(r.role)) + ',' + fmt(r.peak_hz) +
           ',' + fmt(r.snr_db) + ',' + fmt(r.bandwidth_hz) + ',' + std::to_string(r.n_trials) + ',' +
           std::to_string(r.n_clipped) + '\n';
  }
  return out;
}

std::string trials_csv(const std::vector<TrialResult>& trials) {
  std::string out = "trial_id,participant,stimulus_hz,role,peak_hz,snr_db,bandwidth_hz,bandwidth_clipped\n";
  for (const auto& t : trials) {
    for (const auto& rm : t.roles) {
      const auto& m = rm.metrics;
      out += t.spec.trial_id + ',' + t.spec.participant + ',' + fmt(t.spec.stimulus_hz) + ',' +
             std::string(role_name(rm.role)) + ',' + fmt(m.peak_hz) + ',' + fmt(m.snr_db) + ',' +
             fmt(m.bandwidth_hz) + ',' + (m.bandwidth_clipped ? "1" : "0") + '\n';
    }
  }
  return out;
}

std::string correlation_csv(const std::vector<FrequencyCorrelation>& rows) {
  std::string out = "stimulus_hz,r,p,n\n";
  for (const auto& r : rows) {
    out += fmt(r.stimulus_hz) + ',' + fmt(r.result.r) + ',' + fmt(r.result.p_two_sided) + ',' +
           std::to_string(r.result.n) + '\n';
  }
  return out;
}

std::string coefficients_csv(const FilterCoefficients& f) {
  std::string out = "section,b0,b1,b2,a0,a1,a2\n";
  for (std::size_t i = 0; i < f.sections.size(); ++i) {
    const auto& s = f.sections[i];
    out += std::to_string(i) + ',' + fmt(s.b0, 17) + ',' + fmt(s.b1, 17) + ',' + fmt(s.b2, 17) + ",1," +
           fmt(s.a1, 17) + ',' + fmt(s.a2, 17) + '\n';
  }
  return out;
}

std::string response_csv(const FilterCoefficients& f, std::size_t points) {
  std::vector<double> freqs(points);
  const double nyq = f.design.sample_rate / 2.0;
  for (std::size_t i = 0; i < points; ++i) {
    freqs[i] = points > 1 ? nyq * static_cast<double>(i) / static_cast<double>(points - 1) : 0.0;
  }
  const auto h = frequency_response(f, freqs);
  std::string out = "freq_hz,magnitude_db,phase_rad\n";
  for (std::size_t i = 0; i < points; ++i) {
    const double mag = std::abs(h[i]);
    const double db = mag > 0.0 ? 20.0 * std::log10(mag) : -400.0;
    out += fmt(freqs[i]) + ',' + fmt(db) + ',' + fmt(std::arg(h[i])) + '\n';
  }
  return out;
}

std::string decision_header(std::span<const double> stimulus_set) {
  std::string out = "t_start,chosen_hz";
  for (double hz : stimulus_set) out += ",score_" + fmt(hz);
  return out + ",margin_db";
}

std::string decision_line(const Decision& d, std::span<const double> stimulus_set) {
  std::string out = fmt(d.window_start_s) + ',' + (d.chosen_hz ? fmt(*d.chosen_hz) : std::string());
  for (double hz : stimulus_set) {
    auto it = d.scores.find(hz);
    out += ',' + (it == d.scores.end() ? std::string() : fmt(it->second, 6));
  }
  return out + ',' + fmt(d.confidence_db, 6);
}

std::string boxplot_csv(const AmplitudeDataset& data) {
  if (data.empty()) throw Error(Errc::MissingAnalysis, "no amplitude data for box plot");
  std::string out = "stimulus_hz,role,n,min,q1,median,q3,max,whisker_lo,whisker_hi,n_outliers\n";
  for (const auto& [hz, pairs] : data) {
    for (const auto role : {ChannelRole::Occipital, ChannelRole::Ear}) {
      const auto& values = role == ChannelRole::Occipital ? pairs.occipital : pairs.ear;
      const BoxStats b = box_stats(values);
      out += fmt(hz) + ',' + std::string(role_name(role)) + ',' + std::to_string(values.size()) + ',' + fmt(b.min) +
             ',' + fmt(b.q1) + ',' + fmt(b.median) + ',' + fmt(b.q3) + ',' + fmt(b.max) + ',' + fmt(b.whisker_lo) +
             ',' + fmt(b.whisker_hi) + ',' + std::to_string(b.outliers.size()) + '\n';
    }
  }
  return out;
}

std::string scatter_csv(const AmplitudeDataset& data) {
  if (data.empty()) throw Error(Errc::MissingAnalysis, "no amplitude data for scatter plot");
  std::string out = "stimulus_hz,participant,occipital_amp,ear_amp\n";
  for (const auto& [hz, pairs] : data) {
    for (std::size_t i = 0; i < pairs.occipital.size(); ++i) {
      out += fmt(hz) + ',' + pairs.participant[i] + ',' + fmt(pairs.occipital[i]) + ',' + fmt(pairs.ear[i]) + '\n';
    }
  }
  return out;
}

std::string spectrogram_csv(const SpectrogramGrid& occipital, const SpectrogramGrid& ear) {
  if (occipital.times.empty() || occipital.freqs.empty()) {
    throw Error(Errc::MissingAnalysis, "spectrogram has no frames in band");
  }
  std::string out = "time_s,freq_hz,occipital_power,ear_power\n";
  for (std::size_t t = 0; t < occipital.times.size(); ++t) {
    for (std::size_t f = 0; f < occipital.freqs.size(); ++f) {
      out += fmt(occipital.times[t]) + ',' + fmt(occipital.freqs[f]) + ',' + fmt(occipital.power[t][f]) + ',' +
             fmt(ear.power[t][f]) + '\n';
    }
  }
  return out;
}

std::string waveform_csv(const Waveform& w) {
  if (w.times_s.empty()) throw Error(Errc::MissingAnalysis, "empty waveform excerpt");
  std::string out = "t_s,occipital_uV,ear_uV\n";
  for (std::size_t i = 0; i < w.times_s.size(); ++i) {
    out += fmt(w.times_s[i]) + ',' + fmt(w.occipital[i]) + ',' + fmt(w.ear[i]) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// SVG previews

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 50.0;

std::string svg_open(const std::string& title) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" font-family=\"sans-serif\" "
         "font-size=\"11\">\n<rect width=\"640\" height=\"400\" fill=\"white\"/>\n<text x=\"320\" y=\"20\" "
         "text-anchor=\"middle\" font-size=\"14\">" +
         title + "</text>\n";
}

std::string axes(const std::string& xlabel, const std::string& ylabel) {
  return "<line x1=\"50\" y1=\"350\" x2=\"610\" y2=\"350\" stroke=\"black\"/>\n"
         "<line x1=\"50\" y1=\"350\" x2=\"50\" y2=\"30\" stroke=\"black\"/>\n"
         "<text x=\"330\" y=\"385\" text-anchor=\"middle\">" +
         xlabel + "</text>\n<text x=\"15\" y=\"190\" transform=\"rotate(-90 15 190)\" text-anchor=\"middle\">" +
         ylabel + "</text>\n";
}

struct Scale {
  double lo, hi, px_lo, px_hi;
  double operator()(double v) const {
    const double span = hi > lo ? hi - lo : 1.0;
    return px_lo + (v - lo) / span * (px_hi - px_lo);
  }
};

const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"};

}  // namespace

std::string boxplot_svg(const AmplitudeDataset& data) {
  if (data.empty()) throw Error(Errc::MissingAnalysis, "no amplitude data for box plot");
  std::string out = svg_open("Normalised segment FFT amplitude") + axes("stimulus (Hz)", "amplitude");
  const Scale y{0.0, 1.0, kHeight - kMargin, 30.0};
  const double slot = (kWidth - 2 * kMargin) / static_cast<double>(data.size());
  std::size_t i = 0;
  for (const auto& [hz, pairs] : data) {
    const double centre = kMargin + slot * (static_cast<double>(i) + 0.5);
    int r = 0;
    for (const auto* values : {&pairs.occipital, &pairs.ear}) {
      const BoxStats b = box_stats(*values);
      const double x = centre + (r == 0 ? -0.2 : 0.05) * slot;
      const double w = 0.15 * slot;
      const std::string colour = kPalette[r];
      out += "<line x1=\"" + fmt(x + w / 2) + "\" y1=\"" + fmt(y(b.whisker_lo)) + "\" x2=\"" + fmt(x + w / 2) +
             "\" y2=\"" + fmt(y(b.whisker_hi)) + "\" stroke=\"" + colour + "\"/>\n";
      out += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y(b.q3)) + "\" width=\"" + fmt(w) + "\" height=\"" +
             fmt(y(b.q1) - y(b.q3)) + "\" fill=\"" + colour + "\" fill-opacity=\"0.4\" stroke=\"" + colour + "\"/>\n";
      out += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(y(b.median)) + "\" x2=\"" + fmt(x + w) + "\" y2=\"" +
             fmt(y(b.median)) + "\" stroke=\"black\"/>\n";
      for (double o : b.outliers) {
        out += "<circle cx=\"" + fmt(x + w / 2) + "\" cy=\"" + fmt(y(o)) + "\" r=\"1.5\" fill=\"" + colour + "\"/>\n";
      }
      ++r;
    }
    out += "<text x=\"" + fmt(centre) + "\" y=\"365\" text-anchor=\"middle\">" + fmt(hz) + "</text>\n";
    ++i;
  }
  out += "<text x=\"560\" y=\"45\" fill=\"" + std::string(kPalette[0]) + "\">occipital</text>\n";
  out += "<text x=\"560\" y=\"60\" fill=\"" + std::string(kPalette[1]) + "\">ear</text>\n";
  return out + "</svg>\n";
}

std::string scatter_svg(const AmplitudeDataset& data) {
  if (data.empty()) throw Error(Errc::MissingAnalysis, "no amplitude data for scatter plot");
  std::string out = svg_open("Occipital vs ear amplitude") + axes("occipital (normalised)", "ear (normalised)");
  const Scale x{0.0, 1.0, kMargin, kWidth - 30.0};
  const Scale y{0.0, 1.0, kHeight - kMargin, 30.0};
  std::size_t c = 0;
  for (const auto& [hz, pairs] : data) {
    const std::string colour = kPalette[c % std::size(kPalette)];
    for (std::size_t i = 0; i < pairs.occipital.size(); ++i) {
      out += "<circle cx=\"" + fmt(x(pairs.occipital[i]), 6) + "\" cy=\"" + fmt(y(pairs.ear[i]), 6) +
             "\" r=\"1.5\" fill=\"" + colour + "\" fill-opacity=\"0.6\"/>\n";
    }
    out += "<text x=\"560\" y=\"" + fmt(45.0 + 15.0 * static_cast<double>(c)) + "\" fill=\"" + colour + "\">" +
           fmt(hz) + " Hz</text>\n";
    ++c;
  }
  return out + "</svg>\n";
}

std::string spectrogram_svg(const SpectrogramGrid& grid, const std::string& title) {
  if (grid.times.empty() || grid.freqs.empty()) throw Error(Errc::MissingAnalysis, "empty spectrogram");
  std::string out = svg_open(title) + axes("time (s)", "frequency (Hz)");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& row : grid.power) {
    for (double p : row) {
      const double db = 10.0 * std::log10(std::max(p, 1e-300));
      lo = std::min(lo, db);
      hi = std::max(hi, db);
    }
  }
  lo = std::max(lo, hi - 60.0);
  const double cw = (kWidth - kMargin - 30.0) / static_cast<double>(grid.times.size());
  const double ch = (kHeight - kMargin - 30.0) / static_cast<double>(grid.freqs.size());
  for (std::size_t t = 0; t < grid.times.size(); ++t) {
    for (std::size_t f = 0; f < grid.freqs.size(); ++f) {
      const double db = 10.0 * std::log10(std::max(grid.power[t][f], 1e-300));
      const double level = hi > lo ? std::clamp((db - lo) / (hi - lo), 0.0, 1.0) : 0.0;
      const int v = static_cast<int>(std::round(255.0 * level));
      out += "<rect x=\"" + fmt(kMargin + cw * static_cast<double>(t), 6) + "\" y=\"" +
             fmt(kHeight - kMargin - ch * static_cast<double>(f + 1), 6) + "\" width=\"" + fmt(cw + 0.5, 6) +
             "\" height=\"" + fmt(ch + 0.5, 6) + "\" fill=\"rgb(" + std::to_string(v) + ",0," +
             std::to_string(255 - v) + ")\"/>\n";
    }
  }
  out += "<text x=\"45\" y=\"345\" text-anchor=\"end\">" + fmt(grid.freqs.front()) + "</text>\n";
  out += "<text x=\"45\" y=\"40\" text-anchor=\"end\">" + fmt(grid.freqs.back()) + "</text>\n";
  return out + "</svg>\n";
}

std::string waveform_svg(const Waveform& w) {
  if (w.times_s.empty()) throw Error(Errc::MissingAnalysis, "empty waveform excerpt");
  std::string out = svg_open("Filtered waveform excerpt") + axes("time (s)", "amplitude (uV)");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto* s : {&w.occipital, &w.ear}) {
    for (double v : *s) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const Scale x{w.times_s.front(), w.times_s.back(), kMargin, kWidth - 30.0};
  const Scale y{lo, hi, kHeight - kMargin, 30.0};
  int c = 0;
  for (const auto* s : {&w.occipital, &w.ear}) {
    out += "<polyline fill=\"none\" stroke=\"" + std::string(kPalette[c++]) + "\" points=\"";
    for (std::size_t i = 0; i < s->size(); ++i) out += fmt(x(w.times_s[i]), 6) + ',' + fmt(y((*s)[i]), 6) + ' ';
    out += "\"/>\n";
  }
  out += "<text x=\"560\" y=\"45\" fill=\"" + std::string(kPalette[0]) + "\">occipital</text>\n";
  out += "<text x=\"560\" y=\"60\" fill=\"" + std::string(kPalette[1]) + "\">ear</text>\n";
  return out + "</svg>\n";
}

void emit(const std::filesystem::path& out, const std::string& csv_text, const std::string& svg) {
  csv::write_file(out.string(), csv_text);
  if (!svg.empty()) {
    auto svg_path = out;
    svg_path.replace_extension(".svg");
    csv::write_file(svg_path.string(), svg);
  }
}

}  // namespace ssvep::report
