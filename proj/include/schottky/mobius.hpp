#pragma once
#include <array>
#include <complex>

#include "schottky/sphere.hpp"

namespace schottky {

// 2x2 complex matrix acting on the sphere by z -> (az+b)/(cz+d).
// The library keeps representatives normalized: det == 1 and the sign chosen
// so Re(tr) >= 0, ties broken by Im(tr) >= 0 (a map and its negative act
// identically, so one representative of the pair is fixed once and for all).
struct Mobius {
  cpx a{1}, b{0}, c{0}, d{1};

  cpx det() const { return a * d - b * c; }
  cpx tr() const { return a + d; }
  Mobius inverse() const { return {d, -b, -c, a}; }  // valid for det == 1
};

// classification tolerance: width of the parabolic band in |tr^2 - 4|
inline constexpr double kClassTol = 1e-9;

enum class MapClass { identity, parabolic, elliptic, loxodromic };

Mobius normalized(const Mobius& m);              // throws singular_matrix_error
Mobius make_mobius(cpx a, cpx b, cpx c, cpx d);  // normalized on construction
Mobius compose(const Mobius& m1, const Mobius& m2);
inline Mobius operator*(const Mobius& m1, const Mobius& m2) { return compose(m1, m2); }

SpherePt apply(const Mobius& m, const SpherePt& p);

// min over the sign choice of the max entry difference, relative to scale;
// zero iff the two (normalized) matrices describe the same map
double map_distance(const Mobius& m1, const Mobius& m2);

MapClass classify(const Mobius& m, double tol = kClassTol);

// Fixed-point data of a non-identity map. Two labelings are carried:
//  * plus/minus follows the quadratic formula ((a-d) +- sqrt(tr^2-4))/(2c)
//    with the principal square root (argument in (-pi/2, pi/2]);
//  * upper/lower orders by modulus, ties broken lexicographically by (re, im).
// lambda is the eigenvalue with |lambda| >= 1; the boundary dilation factor of
// the conjugated map z -> lambda^2 z. translation_length = 2 log|lambda|.
struct FixedPoints {
  SpherePt plus, minus;
  SpherePt upper, lower;
  cpx lambda{1.0};
  double translation_length = 0.0;
  bool attracting_is_plus = true;

  SpherePt attracting() const { return attracting_is_plus ? plus : minus; }
  SpherePt repelling() const { return attracting_is_plus ? minus : plus; }
};

FixedPoints fixed_points(const Mobius& m);  // throws identity_map_error

// loxodromic multiplier lambda (|lambda| > 1) and translation length 2 log|lambda|
struct Multiplier {
  cpx lambda;
  double length;
};
Multiplier multiplier(const Mobius& m);  // throws not_loxodromic_error

// zeta = a/c (center of the isometric circle of the inverse),
// eta = -d/c (center of the isometric circle of the map itself);
// both require c != 0. Radius of either circle is 1/|c|.
cpx zeta(const Mobius& m);  // throws infinite_fixed_point_error
cpx eta(const Mobius& m);   // throws infinite_fixed_point_error

struct Circle {
  cpx center;
  double radius;
};

struct IsometricCircles {
  Circle of_map;      // centered at eta
  Circle of_inverse;  // centered at zeta
};
IsometricCircles isometric_circles(const Mobius& m);

// |gamma'(z)| measured in the chordal metric on both ends; smooth across the
// pole and infinity: (1+|z|^2) / (|az+b|^2 + |cz+d|^2).
double chordal_derivative(const Mobius& m, const SpherePt& p);

} // namespace schottky
