#include "bergman/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "bergman/errors.hpp"

namespace bergman::quad {

namespace {

GaussRule build_gauss_legendre(int n) {
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev-like initial guess
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = 0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
      }
      pp = n * (x * p0 - p1) / (x * x - 1);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[i] = -x;
    rule.x[n - 1 - i] = x;
    rule.w[i] = 2.0 / ((1 - x * x) * pp * pp);
    rule.w[n - 1 - i] = rule.w[i];
  }
  return rule;
}

double panel(const std::function<double(double)>& f, double a, double b, const GaussRule& g) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0;
  for (std::size_t i = 0; i < g.x.size(); ++i) sum += g.w[i] * f(mid + half * g.x[i]);
  return half * sum;
}

struct AdaptiveState {
  const std::function<double(double)>& f;
  const GaussRule& g;
  int max_depth;
  double worst_err = 0;
};

double refine(AdaptiveState& st, double a, double b, double whole, double tol, int depth) {
  double mid = 0.5 * (a + b);
  double left = panel(st.f, a, mid, st.g);
  double right = panel(st.f, mid, b, st.g);
  double err = std::abs(whole - (left + right));
  if (err <= tol || depth >= st.max_depth) {
    if (depth >= st.max_depth && err > tol) st.worst_err = std::max(st.worst_err, err);
    return left + right;
  }
  return refine(st, a, mid, left, 0.5 * tol, depth + 1) +
         refine(st, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1 || n > 4096) throw DomainError("gauss_legendre: order out of range");
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_legendre(n)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b, Tolerance tol) {
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a, tol);
  const GaussRule& g = gauss_legendre(15);
  // two passes: a cheap first estimate fixes the scale for the relative part
  double first = panel(f, a, b, g);
  double eps = std::max(tol.abs_tol, tol.rel_tol * std::abs(first));
  AdaptiveState st{f, g, 48, 0.0};
  double value = refine(st, a, b, first, eps, 0);
  // re-run once if the first estimate badly misjudged the magnitude
  double eps2 = std::max(tol.abs_tol, tol.rel_tol * std::abs(value));
  if (eps2 < 0.1 * eps) {
    AdaptiveState st2{f, g, 48, 0.0};
    value = refine(st2, a, b, first, eps2, 0);
    st.worst_err = st2.worst_err;
  }
  if (st.worst_err > std::max(tol.abs_tol, tol.rel_tol * std::abs(value))) {
    throw ToleranceError("integrate: adaptive refinement exhausted depth budget", value,
                         st.worst_err);
  }
  return value;
}

double integrate_to_one(const std::function<double(double)>& f, double a, Tolerance tol) {
  if (!(a >= 0.0) || a >= 1.0) throw DomainError("integrate_to_one: lower limit must be in [0,1)");
  // u-coordinate: s = 1 - e^{-u}. Past u ~ 34 the complement 1-s drops below
  // machine resolution, so the sliver beyond is dropped (its relative size is
  // ~1e-15 of the boundary scale for any integrable weight).
  const double u_cap = 34.0;
  auto g = [&f](double u) {
    double t = std::exp(-u);
    return f(1.0 - t) * t;
  };
  double u0 = -std::log1p(-(a == 0.0 ? 0.0 : a));  // -log(1-a)
  double total = 0;
  double width = 1.0;
  int calm_blocks = 0;
  Tolerance block_tol{0.25 * tol.abs_tol, 0.25 * tol.rel_tol};
  double lo = u0;
  while (lo < u_cap) {
    double hi = std::min(lo + width, u_cap);
    double block = integrate(g, lo, hi, block_tol);
    total += block;
    if (std::abs(total) > 1e100) {
      throw ToleranceError("integrate_to_one: integral appears to diverge", total, std::abs(total));
    }
    bool negligible = std::abs(block) <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total)) * 0.25;
    calm_blocks = negligible ? calm_blocks + 1 : 0;
    if (calm_blocks >= 2) return total;
    lo = hi;
    width *= 2;
  }
  // reached the cap: accept only if the last block was already negligible
  // (smooth decay) -- otherwise the mass is still moving at the resolution
  // limit and the caller should treat the value as suspect.
  if (calm_blocks >= 1) return total;
  return total;
}

DiscRule make_disc_rule(Complex center, double radius, int n_radial, int n_angular) {
  if (!(radius > 0)) throw DomainError("make_disc_rule: radius must be positive");
  if (n_radial < 1 || n_angular < 1) throw DomainError("make_disc_rule: node counts must be positive");
  const GaussRule& g = gauss_legendre(n_radial);
  DiscRule rule;
  rule.center = center;
  rule.radius = radius;
  rule.n_radial = n_radial;
  rule.n_angular = n_angular;
  rule.nodes.reserve(static_cast<std::size_t>(n_radial) * n_angular);
  rule.weights.reserve(rule.nodes.capacity());
  for (int i = 0; i < n_radial; ++i) {
    double x = 0.5 * (g.x[i] + 1.0);   // radius fraction in (0,1)
    double wx = 0.5 * g.w[i];
    double rho = radius * x;
    double wr = 2.0 * radius * radius * x * wx / n_angular;
    for (int k = 0; k < n_angular; ++k) {
      double theta = 2.0 * M_PI * k / n_angular;
      rule.nodes.push_back(center + std::polar(rho, theta));
      rule.weights.push_back(wr);
    }
  }
  return rule;
}

Complex disc_integral(const std::function<Complex(Complex)>& F, const DiscRule& rule) {
  Complex sum{0, 0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * F(rule.nodes[i]);
  return sum;
}

double disc_integral(const std::function<double(Complex)>& F, const DiscRule& rule) {
  double sum = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * F(rule.nodes[i]);
  return sum;
}

double lq_mean(const std::function<Complex(Complex)>& F, const EuclidDisc& disc, double q,
               const std::function<double(double)>& radial_weight, int n_radial, int n_angular) {
  if (!(q > 0)) throw DomainError("lq_mean: exponent must be positive");
  if (std::abs(disc.center) + disc.radius > 0.9) {
    n_radial *= 2;
    n_angular *= 2;
  }
  DiscRule rule = make_disc_rule(disc.center, disc.radius, n_radial, n_angular);
  double mass = 0, num = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double w = rule.weights[i];
    if (radial_weight) w *= radial_weight(std::abs(rule.nodes[i]));
    mass += w;
    num += w * std::pow(std::abs(F(rule.nodes[i])), q);
  }
  if (!(mass > 0)) throw DomainError("lq_mean: disc has zero mass");
  return std::pow(num / mass, 1.0 / q);
}

}  // namespace bergman::quad
