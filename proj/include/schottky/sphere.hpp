#pragma once
#include <cmath>
#include <complex>
#include <limits>

namespace schottky {

using cpx = std::complex<double>;

// A point of the Riemann sphere: a finite complex value or a tagged infinity.
// Arithmetic that could hit the point at infinity goes through this type; plain
// cpx is used wherever a value is known to be finite.
struct SpherePt {
  cpx z{0.0, 0.0};
  bool inf = false;

  SpherePt() = default;
  SpherePt(cpx v) : z(v) {}                   // NOLINT: implicit by design
  SpherePt(double re, double im) : z(re, im) {}
  static SpherePt infinity() { SpherePt p; p.inf = true; return p; }

  bool finite() const { return !inf; }
  double abs() const { return inf ? std::numeric_limits<double>::infinity() : std::abs(z); }
};

// Euclidean distance of the stereographic images on the unit sphere.
inline double chordal(const SpherePt& p, const SpherePt& q) {
  if (p.inf && q.inf) return 0.0;
  if (p.inf) return 2.0 / std::sqrt(1.0 + std::norm(q.z));
  if (q.inf) return 2.0 / std::sqrt(1.0 + std::norm(p.z));
  return 2.0 * std::abs(p.z - q.z) / std::sqrt((1.0 + std::norm(p.z)) * (1.0 + std::norm(q.z)));
}

inline bool sphere_close(const SpherePt& p, const SpherePt& q, double tol = 1e-12) {
  return chordal(p, q) <= tol;
}

// Stereographic projection: plane -> unit sphere, projecting from the north
// pole e = (0,0,1); the origin lands on the south pole.
struct Vec3 {
  double x = 0, y = 0, z = 0;
};

inline Vec3 to_sphere(const SpherePt& p) {
  if (p.inf) return {0, 0, 1};
  double n = std::norm(p.z);
  double d = 1.0 + n;
  return {2.0 * p.z.real() / d, 2.0 * p.z.imag() / d, (n - 1.0) / d};
}

inline SpherePt from_sphere(const Vec3& v) {
  double d = 1.0 - v.z;
  if (d <= 1e-300) return SpherePt::infinity();
  return SpherePt(cpx(v.x / d, v.y / d));
}

} // namespace schottky
