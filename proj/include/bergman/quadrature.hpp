#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "bergman/geometry.hpp"

namespace bergman::quad {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre rule of order n, cached.
const GaussRule& gauss_legendre(int n);

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
};

// Adaptive bisection with fixed-order Gauss panels. Error estimate per panel
// is |whole - (left + right)|; refinement stops when the estimate passes the
// (locally split) tolerance. Throws ToleranceError past the depth budget.
double integrate(const std::function<double(double)>& f, double a, double b,
                 Tolerance tol = {});

// Integral of f over [a, 1). Substitutes s = 1 - e^{-u} so boundary-
// concentrated integrands become well-behaved; the upper truncation in u
// grows until the remaining block is negligible relative to the total.
double integrate_to_one(const std::function<double(double)>& f, double a,
                        Tolerance tol = {});

// Tensor rule on a Euclidean disc: Gauss-Legendre in radius x uniform
// (trapezoid) in angle, w.r.t. normalized area measure dA = dx dy / pi.
// Weights sum to radius^2. Exact for polynomials in (w, conj w) of total
// degree <= 2 n_radial - 1 provided n_angular >= 2 n_radial.
struct DiscRule {
  Complex center{0, 0};
  double radius = 0;
  int n_radial = 0;
  int n_angular = 0;
  std::vector<Complex> nodes;
  std::vector<double> weights;
};

DiscRule make_disc_rule(Complex center, double radius, int n_radial, int n_angular);

Complex disc_integral(const std::function<Complex(Complex)>& F, const DiscRule& rule);
double disc_integral(const std::function<double(Complex)>& F, const DiscRule& rule);

// ((1/m(D)) int_D |F|^q dm)^(1/q) where m is dA or weight(|w|) dA.
// Defaults: rule 24 x 48, doubled when the disc pushes past |w| = 0.9.
double lq_mean(const std::function<Complex(Complex)>& F, const EuclidDisc& disc,
               double q, const std::function<double(double)>& radial_weight = {},
               int n_radial = 24, int n_angular = 48);

}  // namespace bergman::quad
