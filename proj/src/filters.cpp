#include "ssvep/filters.hpp"

#include "ssvep/elliptic.hpp"
#include "ssvep/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ssvep {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double prewarp(double hz, double fs) { return 2.0 * fs * std::tan(kPi * hz / fs); }
double unwarp(double omega, double fs) { return fs / kPi * std::atan(omega / (2.0 * fs)); }

void check_pass_edges(double lo, double hi, double fs) {
  if (!(fs > 0.0)) throw Error(Errc::InvalidBandEdges, "sample rate must be positive");
  if (!(lo > 0.0 && lo < hi && hi < fs / 2.0)) {
    throw Error(Errc::InvalidBandEdges, "passband must satisfy 0 < lo < hi < fs/2");
  }
}

void check_design(const FilterDesign& d, bool check_order) {
  check_pass_edges(d.pass_lo_hz, d.pass_hi_hz, d.sample_rate);
  if (!(d.stop_lo_hz > 0.0 && d.stop_lo_hz < d.pass_lo_hz && d.pass_hi_hz < d.stop_hi_hz &&
        d.stop_hi_hz < d.sample_rate / 2.0)) {
    throw Error(Errc::InvalidBandEdges, "need 0 < stop_lo < pass_lo < pass_hi < stop_hi < fs/2");
  }
  if (check_order && (d.order < 2 || d.order % 2 != 0)) {
    throw Error(Errc::InvalidBandEdges, "bandpass order must be even and >= 2");
  }
  if (!(d.ripple_db > 0.0) || !(d.atten_db > d.ripple_db)) {
    throw Error(Errc::InvalidBandEdges, "need 0 < ripple_db < atten_db");
  }
}

// Roots of s^2 - c*B*s + w0^2 = 0: the lowpass-to-bandpass image of c.
std::pair<cplx, cplx> bandpass_image(cplx c, double w0, double bw) {
  const cplx disc = std::sqrt(c * c * (bw * bw) - 4.0 * w0 * w0);
  return {(c * bw + disc) / 2.0, (c * bw - disc) / 2.0};
}

cplx bilinear(cplx s, double fs) { return (2.0 * fs + s) / (2.0 * fs - s); }

// Monic quadratic coefficients (c1, c2) of (z - r1)(z - r2) for a conjugate or real pair.
std::pair<double, double> quadratic(cplx r1, cplx r2) { return {-(r1 + r2).real(), (r1 * r2).real()}; }

cplx section_response(const Biquad& s, double omega) {
  const cplx z1 = std::polar(1.0, -omega);
  const cplx z2 = z1 * z1;
  return (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
}

cplx cascade_response(const std::vector<Biquad>& sections, double omega) {
  cplx h(1.0, 0.0);
  for (const auto& s : sections) h *= section_response(s, omega);
  return h;
}

struct Warped {
  double w0;
  double bw;
};

Warped warp_passband(double lo, double hi, double fs) {
  const double wl = prewarp(lo, fs);
  const double wh = prewarp(hi, fs);
  return {std::sqrt(wl * wh), wh - wl};
}

std::vector<Biquad> build_sections(int proto_order, double ripple_db, double atten_db, const Warped& band,
                                   double fs) {
  const auto proto = elliptic::lowpass_prototype(proto_order, ripple_db, atten_db);

  // Each conjugate prototype pair becomes two bandpass sections. Poles and
  // zeros are paired by ascending resonance frequency.
  std::vector<cplx> poles;
  std::vector<cplx> zeros;
  for (const auto& p : proto.poles) {
    auto [a, b] = bandpass_image(p, band.w0, band.bw);
    poles.push_back(a);
    poles.push_back(b);
  }
  for (const auto& z : proto.zeros) {
    auto [a, b] = bandpass_image(z, band.w0, band.bw);
    zeros.push_back(a);
    zeros.push_back(b);
  }
  auto by_freq = [](cplx l, cplx r) { return std::abs(l.imag()) < std::abs(r.imag()); };
  std::sort(poles.begin(), poles.end(), by_freq);
  std::sort(zeros.begin(), zeros.end(), by_freq);

  std::vector<Biquad> sections;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const cplx zp = bilinear(poles[i], fs);
    const cplx zz = bilinear(zeros[i], fs);
    Biquad s;
    std::tie(s.a1, s.a2) = quadratic(zp, std::conj(zp));
    std::tie(s.b1, s.b2) = quadratic(zz, std::conj(zz));
    sections.push_back(s);
  }
  if (proto.has_real_pole) {
    // 1/(s - p0) maps to B s / (s^2 - p0 B s + w0^2): zeros at DC and infinity.
    auto [a, b] = bandpass_image(proto.real_pole, band.w0, band.bw);
    Biquad s;
    std::tie(s.a1, s.a2) = quadratic(bilinear(a, fs), bilinear(b, fs));
    s.b0 = 1.0;
    s.b1 = 0.0;
    s.b2 = -1.0;
    sections.push_back(s);
  }

  // Prototype DC maps to the digital image of w0; pin the gain there.
  const double centre = 2.0 * kPi * unwarp(band.w0, fs) / fs;
  const double gain = proto.dc_gain / std::abs(cascade_response(sections, centre));
  const double per_section = std::pow(gain, 1.0 / static_cast<double>(sections.size()));
  for (auto& s : sections) {
    s.b0 *= per_section;
    s.b1 *= per_section;
    s.b2 *= per_section;
  }
  return sections;
}

// Lowpass-equivalent stopband edge for the given bandpass edges.
double lowpass_stop_edge(const FilterDesign& d) {
  const Warped band = warp_passband(d.pass_lo_hz, d.pass_hi_hz, d.sample_rate);
  const double sl = prewarp(d.stop_lo_hz, d.sample_rate);
  const double sh = prewarp(d.stop_hi_hz, d.sample_rate);
  const double w02 = band.w0 * band.w0;
  const double lo = (w02 - sl * sl) / (band.bw * sl);
  const double hi = (sh * sh - w02) / (band.bw * sh);
  return std::min(lo, hi);
}

}  // namespace

int minimum_elliptic_order(const FilterDesign& spec) {
  check_design(spec, false);
  const double k = 1.0 / lowpass_stop_edge(spec);
  const double k1 = elliptic::discrimination(spec.ripple_db, spec.atten_db);
  const double n = elliptic::degree_ratio(k, k1);
  return 2 * std::max(1, static_cast<int>(std::ceil(n - 1e-9)));
}

FilterCoefficients design_elliptic_bandpass(const FilterDesign& spec) {
  check_design(spec, true);
  const int needed = minimum_elliptic_order(spec);
  if (spec.order < needed) {
    throw Error(Errc::InfeasibleSpec, "order " + std::to_string(spec.order) + " cannot reach " +
                                          std::to_string(spec.atten_db) + " dB at the stop edges; needs order " +
                                          std::to_string(needed));
  }
  const Warped band = warp_passband(spec.pass_lo_hz, spec.pass_hi_hz, spec.sample_rate);
  return {build_sections(spec.order / 2, spec.ripple_db, spec.atten_db, band, spec.sample_rate), spec};
}

FilterCoefficients design_elliptic_bandpass_by_order(int order, double pass_lo_hz, double pass_hi_hz,
                                                     double ripple_db, double atten_db, double sample_rate) {
  check_pass_edges(pass_lo_hz, pass_hi_hz, sample_rate);
  if (order < 2 || order % 2 != 0) throw Error(Errc::InvalidBandEdges, "bandpass order must be even and >= 2");
  if (!(ripple_db > 0.0) || !(atten_db > ripple_db)) {
    throw Error(Errc::InvalidBandEdges, "need 0 < ripple_db < atten_db");
  }
  const Warped band = warp_passband(pass_lo_hz, pass_hi_hz, sample_rate);
  FilterCoefficients f;
  f.sections = build_sections(order / 2, ripple_db, atten_db, band, sample_rate);

  // Achieved stop edges: bandpass images of the prototype stop edge 1/k.
  const double ws = 1.0 / elliptic::ellipdeg(order / 2, elliptic::discrimination(ripple_db, atten_db));
  const double hi = (ws * band.bw + std::sqrt(ws * ws * band.bw * band.bw + 4.0 * band.w0 * band.w0)) / 2.0;
  const double lo = band.w0 * band.w0 / hi;
  f.design = FilterDesign{order,     pass_lo_hz, pass_hi_hz, unwarp(lo, sample_rate), unwarp(hi, sample_rate),
                          ripple_db, atten_db,   sample_rate};
  return f;
}

FilterCoefficients default_analysis_filter(double sample_rate) {
  return design_elliptic_bandpass_by_order(4, 6.0, 14.0, 1.0, 40.0, sample_rate);
}

FilterCoefficients display_filter(double sample_rate) {
  return design_elliptic_bandpass_by_order(4, 6.0, 8.0, 1.0, 40.0, sample_rate);
}

std::vector<cplx> frequency_response(const FilterCoefficients& f, std::span<const double> freqs_hz) {
  const double fs = f.design.sample_rate;
  std::vector<cplx> out;
  out.reserve(freqs_hz.size());
  for (double hz : freqs_hz) {
    if (!(hz >= 0.0 && hz <= fs / 2.0 * (1.0 + 1e-12))) {
      throw Error(Errc::FrequencyOutOfRange, std::to_string(hz) + " Hz outside [0, fs/2]");
    }
    out.push_back(cascade_response(f.sections, 2.0 * kPi * hz / fs));
  }
  return out;
}

double max_pole_radius(const FilterCoefficients& f) {
  double r = 0.0;
  for (const auto& s : f.sections) {
    const cplx disc = std::sqrt(cplx(s.a1 * s.a1 - 4.0 * s.a2, 0.0));
    r = std::max({r, std::abs((-s.a1 + disc) / 2.0), std::abs((-s.a1 - disc) / 2.0)});
  }
  return r;
}

std::vector<double> apply_filter(const FilterCoefficients& f, std::span<const double> x) {
  std::vector<double> y(x.begin(), x.end());
  for (const auto& s : f.sections) {
    double z1 = 0.0, z2 = 0.0;
    for (double& v : y) {
      const double in = v;
      const double out = s.b0 * in + z1;
      z1 = s.b1 * in - s.a1 * out + z2;
      z2 = s.b2 * in - s.a2 * out;
      v = out;
    }
  }
  return y;
}

std::vector<double> apply_filter_zero_phase(const FilterCoefficients& f, std::span<const double> x) {
  if (x.size() <= 3 * 2 * f.sections.size()) {
    throw Error(Errc::SeriesTooShort, "zero-phase filtering needs more than " +
                                          std::to_string(6 * f.sections.size()) + " samples");
  }
  std::vector<double> y = apply_filter(f, x);
  std::reverse(y.begin(), y.end());
  y = apply_filter(f, y);
  std::reverse(y.begin(), y.end());
  return y;
}

}  // namespace ssvep
