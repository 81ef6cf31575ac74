#pragma once

#include <complex>
#include <vector>

// Jacobi elliptic machinery for elliptic (Cauer) lowpass prototypes.
//
// Functions are evaluated through descending Landen transformations, with the
// argument u normalised to the quarter period: cd(u*K, k), sn(u*K, k).
// Prototypes are normalised so the passband edge sits at 1 rad/s.
namespace ssvep::elliptic {

using cplx = std::complex<double>;

// Complete elliptic integral of the first kind K(k), via the AGM.
double ellipk(double k);
// K'(k) = K(sqrt(1 - k^2)), computed from the complement directly.
double ellipk_complement(double k);

// Descending Landen moduli k_1, k_2, ... until below machine epsilon.
std::vector<double> landen(double k);

cplx cde(cplx u, double k);
cplx sne(cplx u, double k);
// Inverses of cde/sne, reduced to the fundamental period rectangle.
cplx acde(cplx w, double k);
cplx asne(cplx w, double k);

// Solves the degree equation N K'(k)/K(k) = K'(k1)/K(k1) for the selectivity k.
double ellipdeg(int order, double k1);

// Real-valued order needed to reach discrimination k1 at selectivity k.
double degree_ratio(double k, double k1);

// Discrimination parameter eps_p / eps_s for the given ripple/attenuation.
double discrimination(double ripple_db, double atten_db);

struct AnalogPrototype {
  std::vector<cplx> zeros;  // one per conjugate pair (upper half plane)
  std::vector<cplx> poles;  // one per conjugate pair (upper half plane)
  bool has_real_pole{false};
  double real_pole{0.0};
  double dc_gain{1.0};     // |H(0)|: 10^(-ripple/20) for even order, 1 for odd
  double selectivity{1.0};  // k; stopband edge sits at 1/k
};

AnalogPrototype lowpass_prototype(int order, double ripple_db, double atten_db);

}  // namespace ssvep::elliptic
