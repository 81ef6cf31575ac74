#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ssvep::cli {

// Every tunable with its default; defaults follow the recording protocol
// (250 Hz, 6-14 Hz pass / 5-15 Hz stop, order 4, stimuli 7/9/11/13 Hz,
// 1 s segments, 30 s trials).
struct RunConfig {
  double fs{250.0};
  std::vector<double> stimulus_set{7.0, 9.0, 11.0, 13.0};
  int filter_order{4};
  double pass_lo_hz{6.0}, pass_hi_hz{14.0};
  double stop_lo_hz{5.0}, stop_hi_hz{15.0};
  double ripple_db{1.0};
  double atten_db{40.0};
  bool zero_phase{false};
  double segment_s{1.0};
  double trial_s{30.0};
  std::size_t pad_factor{8};
  std::string readout{"nearest"};
  double spectrogram_window_s{1.0};
  double spectrogram_overlap{0.5};
  double spectrogram_lo_hz{5.0}, spectrogram_hi_hz{40.0};
  double detector_window_s{2.0};
  double detector_hop_s{1.0};
  double detector_margin_db{1.0};
  std::uint64_t seed{42};
};

std::string dump(const RunConfig& cfg);

// Exit codes: 0 success, 1 data error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssvep::cli
