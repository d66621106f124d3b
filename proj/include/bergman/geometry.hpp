#pragma once

#include <complex>

namespace bergman {

using Complex = std::complex<double>;

// phi_z(w) = (z - w) / (1 - conj(z) w), the disc automorphism swapping z and 0.
Complex mobius(Complex z, Complex w);

// pseudohyperbolic distance |phi_z(w)| in [0, 1).
double pseudo_dist(Complex z, Complex w);

// hyperbolic (Bergman) distance: atanh of the pseudohyperbolic distance.
double beta_metric(Complex z, Complex w);

struct EuclidDisc {
  Complex center{0, 0};
  double radius = 0;
  bool contains(Complex w) const { return std::abs(w - center) < radius; }
};

// Hyperbolic disc D(z, r) together with its Euclidean realization.
struct BergmanDisc {
  Complex z{0, 0};   // hyperbolic center
  double r = 0;      // hyperbolic radius
  EuclidDisc euclid; // exact Euclidean circle realizing the disc
};

// D(z, r) in the beta metric. Requires |z| < 1 and 0 < r <= 18 (tanh
// saturates in double precision past that and the realization degenerates).
BergmanDisc bergman_disc(Complex z, double r);

// Pseudohyperbolic disc {w : |phi_z(w)| < s}, 0 < s < 1.
BergmanDisc pseudo_disc(Complex z, double s);

}  // namespace bergman
