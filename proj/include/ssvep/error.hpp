#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ssvep {

enum class Errc {
  MalformedHeader,
  RaggedRow,
  NonNumericSample,
  WindowOutOfRange,
  UnknownChannel,
  InvalidRecording,
  InvalidManifest,
  InfeasibleSpec,
  InvalidBandEdges,
  FrequencyOutOfRange,
  SeriesTooShort,
  BadPadLength,
  EmptyBand,
  ZeroDenominator,
  UnknownTarget,
  NoPeak,
  WindowTooShort,
  ConstantSeries,
  LengthMismatch,
  InvalidArgument,
  InvalidDuty,
  AliasingConfig,
  TooFewSamples,
  IoFailure,
  StreamEnded,
  MissingAnalysis,
};

std::string_view errc_name(Errc code);

// All library failures are reported through this type. Parse errors carry the
// 1-based line number of the offending row (0 when not applicable).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        line_(line) {}

  Errc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace ssvep
