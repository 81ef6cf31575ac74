#pragma once

#include "ssvep/detector.hpp"
#include "ssvep/filters.hpp"
#include "ssvep/session.hpp"
#include "ssvep/spectral.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace ssvep::report {

std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string trials_csv(const std::vector<TrialResult>& trials);
std::string correlation_csv(const std::vector<FrequencyCorrelation>& rows);
std::string coefficients_csv(const FilterCoefficients& f);
// Magnitude (dB) and phase on `points` evenly spaced frequencies in [0, fs/2].
std::string response_csv(const FilterCoefficients& f, std::size_t points);

// Header plus one line per decision; an abstention leaves chosen_hz empty.
std::string decision_header(std::span<const double> stimulus_set);
std::string decision_line(const Decision& d, std::span<const double> stimulus_set);

struct Waveform {
  std::vector<double> times_s;
  std::vector<double> occipital;
  std::vector<double> ear;
};

enum class PlotKind { Boxplot, Scatter, Spectrogram, Waveform };

// CSV renderings of plot inputs. Throw MissingAnalysis on empty inputs.
std::string boxplot_csv(const AmplitudeDataset& data);
std::string scatter_csv(const AmplitudeDataset& data);
std::string spectrogram_csv(const SpectrogramGrid& occipital, const SpectrogramGrid& ear);
std::string waveform_csv(const Waveform& w);

// Best-effort SVG previews matching the CSV of the same kind.
std::string boxplot_svg(const AmplitudeDataset& data);
std::string scatter_svg(const AmplitudeDataset& data);
std::string spectrogram_svg(const SpectrogramGrid& grid, const std::string& title);
std::string waveform_svg(const Waveform& w);

// Writes `csv` to `out` and, when `svg` is non-empty, the SVG next to it with
// the extension replaced.
void emit(const std::filesystem::path& out, const std::string& csv, const std::string& svg);

}  // namespace ssvep::report
