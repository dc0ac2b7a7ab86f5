#include "schottky/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

#include "schottky/errors.hpp"

namespace schottky {

double hyp_distance(const HPt& p, const HPt& q) {
  if (!(p.t > 0.0) || !(q.t > 0.0)) throw domain_error("height must be positive");
  double dt = p.t - q.t;
  double arg = (std::norm(p.z - q.z) + dt * dt) / (2.0 * p.t * q.t) + 1.0;
  return std::acosh(std::max(arg, 1.0));
}

HPt apply_halfspace(const Mobius& m, const HPt& p) {
  if (!(p.t > 0.0)) throw domain_error("height must be positive");
  cpx u = m.c * p.z + m.d;
  double den = std::norm(u) + std::norm(m.c) * p.t * p.t;
  cpx znew = ((m.a * p.z + m.b) * std::conj(u) + m.a * std::conj(m.c) * p.t * p.t) / den;
  return {znew, p.t / den};
}

BPt halfspace_to_ball(const HPt& p) {
  // reflect to the lower half-space, then invert in the sphere of radius
  // sqrt(2) about the north pole; this is the inverse of ball_to_halfspace
  double y3 = -p.t;
  double d = std::norm(p.z) + (p.t + 1.0) * (p.t + 1.0);
  return {2.0 * p.z.real() / d, 2.0 * p.z.imag() / d, 1.0 + 2.0 * (y3 - 1.0) / d};
}

HPt ball_to_halfspace(const BPt& v) {
  double e = v.x * v.x + v.y * v.y + (v.z - 1.0) * (v.z - 1.0);
  double y3 = 1.0 + 2.0 * (v.z - 1.0) / e;
  return {cpx(2.0 * v.x / e, 2.0 * v.y / e), -y3};
}

HPt geodesic_point(const Geodesic& g, double s) {
  if (g.e1.inf || g.e2.inf) {
    cpx base = g.e1.inf ? g.e2.z : g.e1.z;
    return {base, std::exp(s)};
  }
  cpx mid = (g.e1.z + g.e2.z) / 2.0;
  double r = std::abs(g.e2.z - g.e1.z) / 2.0;
  cpx u = (g.e2.z - g.e1.z) / std::abs(g.e2.z - g.e1.z);
  return {mid + r * std::tanh(s) * u, r / std::cosh(s)};
}

Geodesic axis(const Mobius& m) {
  if (classify(m) != MapClass::loxodromic) throw not_loxodromic_error();
  FixedPoints fp = fixed_points(m);
  return {fp.minus, fp.plus};
}

// map sending p -> 0, q -> infinity (p, q distinct points of the sphere)
static Mobius standardize_endpoints(const SpherePt& p, const SpherePt& q) {
  if (p.inf) return make_mobius(0.0, 1.0, 1.0, -q.z);  // z -> 1/(z - q)
  if (q.inf) return make_mobius(1.0, -p.z, 0.0, 1.0);  // z -> z - p
  return make_mobius(1.0, -p.z, 1.0, -q.z);            // z -> (z-p)/(z-q)
}

static double cosh_dist_to_vertical(const HPt& p) {
  return std::sqrt(std::norm(p.z) + p.t * p.t) / p.t;
}

double point_to_geodesic(const HPt& p, const Geodesic& g) {
  Mobius h = standardize_endpoints(g.e1, g.e2);
  HPt q = apply_halfspace(h, p);
  return std::acosh(std::max(cosh_dist_to_vertical(q), 1.0));
}

// golden-section minimum of a unimodal function on [a, b]
template <typename F>
static double golden_min(F f, double a, double b, int iters) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; i++) {
    if (f1 <= f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a); f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

double axis_distance(const Geodesic& g1, const Geodesic& g2) {
  // shared endpoint: the infimum is 0 and is not attained
  for (const SpherePt& e : {g1.e1, g1.e2})
    for (const SpherePt& f : {g2.e1, g2.e2})
      if (sphere_close(e, f)) return 0.0;

  Mobius h = standardize_endpoints(g1.e1, g1.e2);
  SpherePt p = apply(h, g2.e1), q = apply(h, g2.e2);
  if (p.inf || q.inf) return 0.0;  // only if an endpoint coincided exactly
  Geodesic moved{p, q};
  auto f = [&](double s) { return cosh_dist_to_vertical(geodesic_point(moved, s)); };
  // |s| > 45 is within 1e-18 of the endpoints; enough iterations for 1e-12
  double m = golden_min(f, -45.0, 45.0, 130);
  return std::acosh(std::max(m, 1.0));
}

double axis_distance_upper_vs_vertical(cpx u, cpx v) {
  HPt p{(u + v) / 2.0, std::abs(u - v) / 2.0};
  if (!(p.t > 0.0)) throw domain_error("coincident endpoints");
  return std::acosh(std::max(cosh_dist_to_vertical(p), 1.0));
}

double ball_isometric_sphere_radius(const Mobius& m) {
  Multiplier mult = multiplier(m);  // throws when not loxodromic
  double d0 = point_to_geodesic({cpx(0.0, 0.0), 1.0}, axis(m));
  return 1.0 / (std::cosh(d0) * std::sinh(mult.length / 2.0));
}

} // namespace schottky
