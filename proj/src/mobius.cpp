#include "schottky/mobius.hpp"

#include <algorithm>
#include <cmath>

#include "schottky/errors.hpp"

namespace schottky {

static bool entries_finite(const Mobius& m) {
  for (cpx v : {m.a, m.b, m.c, m.d})
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

Mobius normalized(const Mobius& m) {
  if (!entries_finite(m)) throw singular_matrix_error("matrix has non-finite entries");
  cpx det = m.det();
  if (std::abs(det) == 0.0) throw singular_matrix_error();
  cpx s = std::sqrt(det);
  Mobius r{m.a / s, m.b / s, m.c / s, m.d / s};
  cpx t = r.tr();
  bool flip = t.real() < 0.0 || (t.real() == 0.0 && t.imag() < 0.0);
  if (flip) { r.a = -r.a; r.b = -r.b; r.c = -r.c; r.d = -r.d; }
  return r;
}

Mobius make_mobius(cpx a, cpx b, cpx c, cpx d) { return normalized({a, b, c, d}); }

Mobius compose(const Mobius& m1, const Mobius& m2) {
  return normalized({m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                     m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d});
}

SpherePt apply(const Mobius& m, const SpherePt& p) {
  if (p.inf) {
    if (std::abs(m.c) == 0.0) return SpherePt::infinity();
    return SpherePt(m.a / m.c);
  }
  cpx den = m.c * p.z + m.d;
  if (std::abs(den) == 0.0) return SpherePt::infinity();
  return SpherePt((m.a * p.z + m.b) / den);
}

double map_distance(const Mobius& m1, const Mobius& m2) {
  auto ent = [](const Mobius& m, int i) {
    return i == 0 ? m.a : i == 1 ? m.b : i == 2 ? m.c : m.d;
  };
  double dplus = 0, dminus = 0, scale = 1;
  for (int i = 0; i < 4; i++) {
    dplus = std::max(dplus, std::abs(ent(m1, i) - ent(m2, i)));
    dminus = std::max(dminus, std::abs(ent(m1, i) + ent(m2, i)));
    scale = std::max(scale, std::abs(ent(m1, i)));
  }
  return std::min(dplus, dminus) / scale;
}

MapClass classify(const Mobius& m, double tol) {
  double off = std::max(std::abs(m.b), std::abs(m.c));
  if (off <= tol && (std::max(std::abs(m.a - 1.0), std::abs(m.d - 1.0)) <= tol ||
                     std::max(std::abs(m.a + 1.0), std::abs(m.d + 1.0)) <= tol))
    return MapClass::identity;
  cpx t2 = m.tr() * m.tr();
  if (std::abs(t2 - 4.0) <= tol) return MapClass::parabolic;
  if (std::abs(t2.imag()) <= tol && t2.real() >= -tol && t2.real() < 4.0 - tol)
    return MapClass::elliptic;
  return MapClass::loxodromic;
}

static bool modulus_less(const SpherePt& p, const SpherePt& q) {
  double ap = p.abs(), aq = q.abs();
  if (ap != aq) return ap < aq;
  if (p.inf || q.inf) return false;
  if (p.z.real() != q.z.real()) return p.z.real() < q.z.real();
  return p.z.imag() < q.z.imag();
}

FixedPoints fixed_points(const Mobius& m) {
  if (classify(m) == MapClass::identity) throw identity_map_error();
  FixedPoints fp;
  cpx t = m.tr();
  cpx s = std::sqrt(t * t - 4.0);  // principal branch, arg in (-pi/2, pi/2]

  if (std::abs(m.c) == 0.0) {
    // one fixed point at infinity; the other solves az + b = dz
    cpx ad = m.a - m.d;
    SpherePt fin = std::abs(ad) == 0.0 ? SpherePt::infinity() : SpherePt(m.b / (m.d - m.a));
    // s is the principal root of (a-d)^2; infinity takes the slot whose sign matches
    bool inf_is_plus = std::abs(s - ad) <= std::abs(s + ad);
    fp.plus = inf_is_plus ? SpherePt::infinity() : fin;
    fp.minus = inf_is_plus ? fin : SpherePt::infinity();
    // eigenvalue at infinity is a; attracting there iff |a| > |d|
    bool inf_attracts = std::abs(m.a) >= std::abs(m.d);
    fp.attracting_is_plus = (inf_attracts == inf_is_plus);
    fp.lambda = std::abs(m.a) >= std::abs(m.d) ? m.a : m.d;
  } else {
    fp.plus = SpherePt((m.a - m.d + s) / (2.0 * m.c));
    fp.minus = SpherePt((m.a - m.d - s) / (2.0 * m.c));
    // eigenvalue associated with z is cz + d; attracting iff its modulus > 1
    cpx mu_plus = (t + s) / 2.0, mu_minus = (t - s) / 2.0;
    fp.attracting_is_plus = std::abs(mu_plus) >= std::abs(mu_minus);
    fp.lambda = fp.attracting_is_plus ? mu_plus : mu_minus;
  }
  if (std::abs(fp.lambda) < 1.0) fp.lambda = 1.0 / fp.lambda;  // guard rounding
  fp.translation_length = 2.0 * std::log(std::abs(fp.lambda));
  if (modulus_less(fp.plus, fp.minus)) { fp.lower = fp.plus; fp.upper = fp.minus; }
  else { fp.lower = fp.minus; fp.upper = fp.plus; }
  return fp;
}

Multiplier multiplier(const Mobius& m) {
  if (classify(m) != MapClass::loxodromic) throw not_loxodromic_error();
  FixedPoints fp = fixed_points(m);
  return {fp.lambda, fp.translation_length};
}

cpx zeta(const Mobius& m) {
  if (std::abs(m.c) == 0.0) throw infinite_fixed_point_error();
  return m.a / m.c;
}

cpx eta(const Mobius& m) {
  if (std::abs(m.c) == 0.0) throw infinite_fixed_point_error();
  return -m.d / m.c;
}

IsometricCircles isometric_circles(const Mobius& m) {
  if (std::abs(m.c) == 0.0) throw infinite_fixed_point_error();
  double r = 1.0 / std::abs(m.c);
  return {{eta(m), r}, {zeta(m), r}};
}

double chordal_derivative(const Mobius& m, const SpherePt& p) {
  if (p.inf) return 1.0 / (std::norm(m.a) + std::norm(m.c));
  return (1.0 + std::norm(p.z)) /
         (std::norm(m.a * p.z + m.b) + std::norm(m.c * p.z + m.d));
}

} // namespace schottky
