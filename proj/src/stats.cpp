#include "ssvep/stats.hpp"

#include "ssvep/error.hpp"
#include "ssvep/random.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace ssvep {

std::vector<double> normalize_unit_interval(std::span<const double> x) {
  if (x.size() < 2) throw Error(Errc::ConstantSeries, "need at least two values to normalise");
  const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(hi > lo)) throw Error(Errc::ConstantSeries, "series is constant");
  std::vector<double> out(x.size());
  const double range = hi - lo;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - lo) / range;
  return out;
}

namespace {

struct Centered {
  std::vector<double> values;
  double norm{0.0};
};

Centered center(std::span<const double> x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  Centered c;
  c.values.reserve(x.size());
  double ss = 0.0;
  for (double v : x) {
    c.values.push_back(v - mean);
    ss += (v - mean) * (v - mean);
  }
  c.norm = std::sqrt(ss);
  return c;
}

void check_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(Errc::LengthMismatch, "series lengths differ");
  if (x.size() < 3) throw Error(Errc::InvalidArgument, "correlation needs n >= 3");
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

CorrelationResult pearson_r(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const Centered cx = center(x);
  const Centered cy = center(y);
  if (!(cx.norm > 0.0) || !(cy.norm > 0.0)) throw Error(Errc::ConstantSeries, "correlation with a constant series");

  CorrelationResult res;
  res.n = x.size();
  res.r = std::clamp(dot(cx.values, cy.values) / (cx.norm * cy.norm), -1.0, 1.0);
  const double dof = static_cast<double>(res.n - 2);
  const double one_minus = 1.0 - res.r * res.r;
  if (one_minus <= 0.0) {
    res.p_two_sided = 0.0;
  } else {
    const double t = std::abs(res.r) * std::sqrt(dof / one_minus);
    const boost::math::students_t dist(dof);
    res.p_two_sided = std::clamp(2.0 * boost::math::cdf(boost::math::complement(dist, t)), 0.0, 1.0);
  }
  return res;
}

double permutation_p(std::span<const double> x, std::span<const double> y, std::size_t iters, std::uint64_t seed) {
  check_pair(x, y);
  if (iters < 1000) throw Error(Errc::InvalidArgument, "permutation test needs at least 1000 iterations");
  const Centered cx = center(x);
  Centered cy = center(y);
  if (!(cx.norm > 0.0) || !(cy.norm > 0.0)) throw Error(Errc::ConstantSeries, "correlation with a constant series");

  const double denom = cx.norm * cy.norm;
  const double observed = std::abs(dot(cx.values, cy.values) / denom);
  // Relative slack so permutations reproducing the observed pairing count as ties.
  const double threshold = observed * (1.0 - 1e-12);
  Rng rng(seed);
  std::vector<double>& perm = cy.values;
  std::size_t hits = 0;
  for (std::size_t it = 0; it < iters; ++it) {
    for (std::size_t i = perm.size() - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.below(i + 1)]);
    }
    if (std::abs(dot(cx.values, perm) / denom) >= threshold) ++hits;
  }
  return static_cast<double>(hits + 1) / static_cast<double>(iters + 1);
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw Error(Errc::InvalidArgument, "quantile of empty series");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * std::clamp(q, 0.0, 1.0);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BoxStats box_stats(std::span<const double> values) {
  if (values.empty()) throw Error(Errc::InvalidArgument, "box statistics of empty series");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  BoxStats b;
  b.min = v.front();
  b.max = v.back();
  b.q1 = quantile_sorted(v, 0.25);
  b.median = quantile_sorted(v, 0.5);
  b.q3 = quantile_sorted(v, 0.75);
  const double iqr = b.q3 - b.q1;
  const double lo_fence = b.q1 - 1.5 * iqr;
  const double hi_fence = b.q3 + 1.5 * iqr;
  b.whisker_lo = b.max;
  b.whisker_hi = b.min;
  for (double x : v) {
    if (x < lo_fence || x > hi_fence) {
      b.outliers.push_back(x);
    } else {
      b.whisker_lo = std::min(b.whisker_lo, x);
      b.whisker_hi = std::max(b.whisker_hi, x);
    }
  }
  return b;
}

}  // namespace ssvep
