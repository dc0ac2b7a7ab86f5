#pragma once
#include <cmath>
#include <complex>
#include <random>

#include "schottky/mobius.hpp"

namespace schottky::testutil {

// Map with fixed points p and q and eigenvalue lambda; for |lambda| > 1 the
// attracting point is q (conjugate of z -> lambda^2 z, which attracts at
// infinity, by S(0) = p, S(inf) = q).
inline Mobius mobius_with_fps(cpx p, cpx q, cpx lambda) {
  Mobius s = make_mobius(q, p, 1.0, 1.0);  // needs q != p
  return s * make_mobius(lambda, 0.0, 0.0, 1.0 / lambda) * s.inverse();
}

// Map with prescribed isometric-circle centers: zeta = a/c, eta = -d/c,
// radius 1 (c = 1), unit determinant by construction. Trace is zeta - eta.
inline Mobius mobius_with_centers(cpx zeta_at, cpx eta_at) {
  return make_mobius(zeta_at, -zeta_at * eta_at - 1.0, 1.0, -eta_at);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline cpx random_unit_box(std::mt19937_64& rng) {
  return {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
}

// generic invertible matrix, kept away from singularity
inline Mobius random_mobius(std::mt19937_64& rng) {
  for (;;) {
    cpx a = random_unit_box(rng), b = random_unit_box(rng);
    cpx c = random_unit_box(rng), d = random_unit_box(rng);
    if (std::abs(a * d - b * c) < 0.1) continue;
    return make_mobius(a, b, c, d);
  }
}

// loxodromic with |tr| in [tr_lo, tr_hi] and both fixed-point moduli in
// [fp_lo, fp_hi]; the multiplier gets a random phase when that keeps the
// trace inside the window
inline Mobius random_loxodromic(std::mt19937_64& rng, double tr_lo, double tr_hi, double fp_lo,
                                double fp_hi) {
  cpx p, q;
  do {
    p = std::polar(uniform(rng, fp_lo, fp_hi), uniform(rng, 0.0, 6.283185307179586));
    q = std::polar(uniform(rng, fp_lo, fp_hi), uniform(rng, 0.0, 6.283185307179586));
  } while (std::abs(p - q) < 0.05);
  double t = uniform(rng, tr_lo + 0.05, tr_hi);
  double lam = (t + std::sqrt(t * t - 4.0)) / 2.0;
  cpx lambda = lam;
  for (int tries = 0; tries < 8; tries++) {
    cpx cand = std::polar(lam, uniform(rng, 0.0, 6.283185307179586));
    double tr = std::abs(cand + 1.0 / cand);
    if (tr >= tr_lo && tr <= tr_hi) {
      lambda = cand;
      break;
    }
  }
  return mobius_with_fps(p, q, lambda);
}

} // namespace schottky::testutil
