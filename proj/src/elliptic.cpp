#include "ssvep/elliptic.hpp"

#include "ssvep/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ssvep::elliptic {

namespace {

constexpr double kPi = std::numbers::pi;

double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > std::numeric_limits<double>::epsilon() * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

// Symmetric remainder: x - y * round(x / y).
double srem(double x, double y) { return x - y * std::round(x / y); }

}  // namespace

double ellipk(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw Error(Errc::InvalidArgument, "elliptic modulus must lie in [0, 1)");
  return kPi / (2.0 * agm(1.0, std::sqrt((1.0 - k) * (1.0 + k))));
}

double ellipk_complement(double k) {
  if (!(k > 0.0 && k <= 1.0)) throw Error(Errc::InvalidArgument, "elliptic modulus must lie in (0, 1]");
  return kPi / (2.0 * agm(1.0, k));
}

std::vector<double> landen(double k) {
  std::vector<double> v;
  for (int i = 0; i < 64 && k > std::numeric_limits<double>::epsilon(); ++i) {
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    k = (k / (1.0 + kp)) * (k / (1.0 + kp));
    v.push_back(k);
  }
  return v;
}

cplx cde(cplx u, double k) {
  const auto v = landen(k);
  cplx w = std::cos(u * (kPi / 2.0));
  for (auto it = v.rbegin(); it != v.rend(); ++it) w = (1.0 + *it) * w / (1.0 + *it * w * w);
  return w;
}

cplx sne(cplx u, double k) {
  const auto v = landen(k);
  cplx w = std::sin(u * (kPi / 2.0));
  for (auto it = v.rbegin(); it != v.rend(); ++it) w = (1.0 + *it) * w / (1.0 + *it * w * w);
  return w;
}

cplx acde(cplx w, double k) {
  const auto v = landen(k);
  double prev = k;
  for (double vn : v) {
    w = w / (1.0 + std::sqrt(1.0 - w * w * (prev * prev))) * (2.0 / (1.0 + vn));
    prev = vn;
  }
  cplx u = std::acos(w) * (2.0 / kPi);
  const double ratio = ellipk_complement(k) / ellipk(k);
  return {srem(u.real(), 4.0), srem(u.imag(), 2.0 * ratio)};
}

cplx asne(cplx w, double k) { return 1.0 - acde(w, k); }

double ellipdeg(int order, double k1) {
  if (order < 1) throw Error(Errc::InvalidArgument, "prototype order must be >= 1");
  const double k1p = std::sqrt((1.0 - k1) * (1.0 + k1));
  double prod = 1.0;
  for (int i = 1; i <= order / 2; ++i) {
    const double ui = (2.0 * i - 1.0) / order;
    prod *= sne(ui, k1p).real();
  }
  const double kp = std::pow(k1p, order) * std::pow(prod, 4);
  return std::sqrt((1.0 - kp) * (1.0 + kp));
}

double degree_ratio(double k, double k1) {
  return ellipk(k) * ellipk_complement(k1) / (ellipk_complement(k) * ellipk(k1));
}

double discrimination(double ripple_db, double atten_db) {
  const double ep = std::sqrt(std::pow(10.0, ripple_db / 10.0) - 1.0);
  const double es = std::sqrt(std::pow(10.0, atten_db / 10.0) - 1.0);
  return ep / es;
}

AnalogPrototype lowpass_prototype(int order, double ripple_db, double atten_db) {
  if (!(ripple_db > 0.0) || !(atten_db > ripple_db)) {
    throw Error(Errc::InvalidArgument, "need 0 < ripple_db < atten_db");
  }
  const double ep = std::sqrt(std::pow(10.0, ripple_db / 10.0) - 1.0);
  const double k1 = discrimination(ripple_db, atten_db);
  const double k = ellipdeg(order, k1);

  AnalogPrototype proto;
  proto.selectivity = k;
  proto.dc_gain = order % 2 == 0 ? std::pow(10.0, -ripple_db / 20.0) : 1.0;

  const cplx j(0.0, 1.0);
  const cplx v0 = -j * asne(j / ep, k1) / static_cast<double>(order);
  for (int i = 1; i <= order / 2; ++i) {
    const double ui = (2.0 * i - 1.0) / order;
    const cplx zeta = cde(ui, k);
    proto.zeros.push_back(j / (k * zeta));
    proto.poles.push_back(j * cde(ui - j * v0, k));
  }
  if (order % 2 == 1) {
    proto.has_real_pole = true;
    proto.real_pole = (j * sne(j * v0, k)).real();
  }
  return proto;
}

}  // namespace ssvep::elliptic
