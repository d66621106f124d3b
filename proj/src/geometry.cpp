#include "bergman/geometry.hpp"

#include <cmath>

#include "bergman/errors.hpp"

namespace bergman {

Complex mobius(Complex z, Complex w) {
  return (z - w) / (1.0 - std::conj(z) * w);
}

double pseudo_dist(Complex z, Complex w) {
  return std::abs(mobius(z, w));
}

double beta_metric(Complex z, Complex w) {
  return std::atanh(pseudo_dist(z, w));
}

BergmanDisc pseudo_disc(Complex z, double s) {
  if (std::abs(z) >= 1.0) throw DomainError("pseudo_disc: center must lie in the unit disc");
  if (!(s > 0.0) || s >= 1.0) throw DomainError("pseudo_disc: radius must be in (0,1)");
  double a2 = std::norm(z);
  double denom = 1.0 - s * s * a2;
  BergmanDisc d;
  d.z = z;
  d.r = std::atanh(s);
  d.euclid.center = (1.0 - s * s) * z / denom;
  d.euclid.radius = s * (1.0 - a2) / denom;
  return d;
}

BergmanDisc bergman_disc(Complex z, double r) {
  if (std::abs(z) >= 1.0) throw DomainError("bergman_disc: center must lie in the unit disc");
  if (!(r > 0.0)) throw DomainError("bergman_disc: radius must be positive");
  if (r > 18.0) throw DomainError("bergman_disc: radius too large, tanh saturates in double precision");
  BergmanDisc d = pseudo_disc(z, std::tanh(r));
  d.r = r;  // keep the exact requested radius, atanh(tanh r) may differ in the last ulp
  return d;
}

}  // namespace bergman
