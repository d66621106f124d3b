#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "bergman/errors.hpp"
#include "bergman/geometry.hpp"

using bergman::Complex;

namespace {

std::vector<Complex> random_disc_points(std::size_t n, unsigned seed, double rho_max = 0.98) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> out;
  out.reserve(n);
  while (out.size() < n) {
    double x = 2 * unit(rng) - 1, y = 2 * unit(rng) - 1;
    if (x * x + y * y < rho_max * rho_max) out.emplace_back(x, y);
  }
  return out;
}

}  // namespace

TEST_CASE("mobius transform basics") {
  CHECK(std::abs(bergman::mobius({0, 0}, {0.3, -0.2}) - Complex{-0.3, 0.2}) < 1e-15);
  // mobius(z, z) = 0
  for (auto z : random_disc_points(50, 11)) {
    CHECK(std::abs(bergman::mobius(z, z)) < 1e-14);
  }
  // involution through the origin: phi_z(0) = z, phi_z(z) = 0
  Complex z{0.4, 0.25};
  CHECK(std::abs(bergman::mobius(z, {0, 0}) - z) < 1e-15);
}

TEST_CASE("beta metric values and symmetry") {
  // atanh(1/2) = (1/2) log 3
  CHECK(bergman::beta_metric({0, 0}, {0.5, 0}) == doctest::Approx(0.54930614433405485).epsilon(1e-14));
  CHECK(bergman::beta_metric({0, 0}, {0, 0}) == 0.0);
  for (auto z : random_disc_points(100, 17)) {
    for (auto w : random_disc_points(3, 23)) {
      CHECK(bergman::beta_metric(z, w) == doctest::Approx(bergman::beta_metric(w, z)).epsilon(1e-12));
    }
  }
}

TEST_CASE("beta metric is Mobius invariant") {
  // distance unchanged under w -> phi_a(w) composed with rotations
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto zs = random_disc_points(1000, 41);
  auto ws = random_disc_points(1000, 43);
  auto as = random_disc_points(1000, 47, 0.9);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    double theta = 2 * M_PI * unit(rng);
    Complex rot = std::polar(1.0, theta);
    Complex tz = rot * bergman::mobius(as[i], zs[i]);
    Complex tw = rot * bergman::mobius(as[i], ws[i]);
    double d0 = bergman::beta_metric(zs[i], ws[i]);
    double d1 = bergman::beta_metric(tz, tw);
    CHECK(std::abs(d0 - d1) < 1e-10 * (1 + d0));
  }
}

TEST_CASE("beta metric triangle inequality on sampled triples") {
  auto a = random_disc_points(400, 51);
  auto b = random_disc_points(400, 53);
  auto c = random_disc_points(400, 59);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double ab = bergman::beta_metric(a[i], b[i]);
    double bc = bergman::beta_metric(b[i], c[i]);
    double ac = bergman::beta_metric(a[i], c[i]);
    CHECK(ac <= ab + bc + 1e-12);
  }
}

TEST_CASE("bergman disc euclidean realization") {
  auto d0 = bergman::bergman_disc({0, 0}, 1.0);
  CHECK(std::abs(d0.euclid.center) < 1e-15);
  CHECK(d0.euclid.radius == doctest::Approx(std::tanh(1.0)).epsilon(1e-14));

  auto d = bergman::bergman_disc({0.5, 0}, 1.0);
  CHECK(d.euclid.center.real() == doctest::Approx(0.24560087279240988).epsilon(1e-10));
  CHECK(d.euclid.center.imag() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(d.euclid.radius == doctest::Approx(0.6680700612475976).epsilon(1e-10));
}

TEST_CASE("bergman disc membership agrees with metric on samples") {
  auto d = bergman::bergman_disc({0.5, 0}, 1.0);
  auto pts = random_disc_points(10000, 61, 0.999);
  int checked = 0;
  for (auto w : pts) {
    double dist = bergman::beta_metric({0.5, 0}, w);
    // skip a thin band around the boundary circle where roundoff could
    // legitimately flip the classification
    if (std::abs(dist - 1.0) < 1e-9) continue;
    bool metric_in = dist < 1.0;
    bool euclid_in = std::abs(w - d.euclid.center) < d.euclid.radius;
    CHECK(metric_in == euclid_in);
    ++checked;
  }
  CHECK(checked > 9000);
}

TEST_CASE("bergman disc stays inside the unit disc") {
  for (auto z : random_disc_points(300, 67, 0.97)) {
    for (double r : {0.25, 1.0, 2.0, 5.0}) {
      auto d = bergman::bergman_disc(z, r);
      CHECK(std::abs(d.euclid.center) + d.euclid.radius < 1.0);
    }
  }
}

TEST_CASE("euclid radius comparable to (1-|z|) at fixed r") {
  // R(z, r) / (1 - |z|) stays in a positive band depending only on r
  double lo = 1e300, hi = 0;
  for (double t = 0.0; t <= 0.95; t += 0.01) {
    auto d = bergman::bergman_disc({t, 0}, 1.0);
    double ratio = d.euclid.radius / (1 - t);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(lo > 0.1);
  CHECK(hi / lo < 10.0);
}

TEST_CASE("pseudo disc parameterization matches tanh of bergman radius") {
  Complex z{0.3, -0.4};
  auto a = bergman::bergman_disc(z, 0.8);
  auto b = bergman::pseudo_disc(z, std::tanh(0.8));
  CHECK(std::abs(a.euclid.center - b.euclid.center) < 1e-14);
  CHECK(a.euclid.radius == doctest::Approx(b.euclid.radius).epsilon(1e-14));
}

TEST_CASE("disc domain guards") {
  CHECK_THROWS_AS(bergman::bergman_disc({1.2, 0}, 1.0), bergman::DomainError);
  CHECK_THROWS_AS(bergman::bergman_disc({0.2, 0}, -1.0), bergman::DomainError);
  CHECK_THROWS_AS(bergman::bergman_disc({0.2, 0}, 50.0), bergman::DomainError);
  CHECK_THROWS_AS(bergman::pseudo_disc({0.2, 0}, 1.5), bergman::DomainError);
}
