#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ssvep {

struct CorrelationResult {
  double r{0.0};
  std::size_t n{0};
  double p_two_sided{1.0};
};

struct BoxStats {
  double min{0.0};
  double q1{0.0};
  double median{0.0};
  double q3{0.0};
  double max{0.0};
  double whisker_lo{0.0};  // most extreme values inside 1.5 IQR of the quartiles
  double whisker_hi{0.0};
  std::vector<double> outliers;  // ascending
};

// (x - min) / (max - min). Throws ConstantSeries (also for fewer than 2 values).
std::vector<double> normalize_unit_interval(std::span<const double> x);

// Sample Pearson r with the two-sided Student-t p-value on n - 2 degrees of freedom.
// Throws LengthMismatch, ConstantSeries, InvalidArgument (n < 3).
CorrelationResult pearson_r(std::span<const double> x, std::span<const double> y);

// Two-sided permutation p-value for Pearson r: (#{|r_perm| >= |r_obs|} + 1) / (iters + 1).
// Throws InvalidArgument when iters < 1000, plus pearson_r's errors.
double permutation_p(std::span<const double> x, std::span<const double> y, std::size_t iters, std::uint64_t seed);

// Type-7 quartiles (linear interpolation between closest ranks).
// Throws InvalidArgument on empty input.
BoxStats box_stats(std::span<const double> values);

// Type-7 quantile of already sorted values, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

}  // namespace ssvep
