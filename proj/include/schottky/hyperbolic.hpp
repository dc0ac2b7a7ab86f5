#pragma once
#include "schottky/mobius.hpp"
#include "schottky/sphere.hpp"

namespace schottky {

// Upper half-space model: boundary coordinate z, height t > 0.
struct HPt {
  cpx z{0.0, 0.0};
  double t = 1.0;
};

// Unit-ball model point (|v| < 1 inside).
using BPt = Vec3;

// cosh d = (|z1-z2|^2 + (t1-t2)^2) / (2 t1 t2) + 1
double hyp_distance(const HPt& p, const HPt& q);

// Poincare extension of a unit-determinant map to the upper half-space.
HPt apply_halfspace(const Mobius& m, const HPt& p);

// Isometry between the two models. The ball origin corresponds to (z=0, t=1);
// its boundary extension is stereographic projection from the north pole
// (0,0,1) -> infinity, south pole -> 0 (see to_sphere/from_sphere).
BPt halfspace_to_ball(const HPt& p);
HPt ball_to_halfspace(const BPt& v);

// Geodesic given by its distinct endpoints on the sphere.
struct Geodesic {
  SpherePt e1, e2;
};

// Unit-speed parametrization; s = 0 is the summit (both endpoints finite)
// or height 1 (vertical line).
HPt geodesic_point(const Geodesic& g, double s);

Geodesic axis(const Mobius& m);  // throws not_loxodromic_error

// Distance from a point to a geodesic: conjugate the geodesic to (0, infinity)
// and use cosh d = sqrt(|z|^2 + t^2) / t (closed form, no iteration).
double point_to_geodesic(const HPt& p, const Geodesic& g);

// Distance between two geodesics, 0 if they meet or share an endpoint.
// One axis is conjugated to (0, infinity); the closed-form point distance is
// then minimized along the other by golden-section (convex along a geodesic).
// Absolute accuracy ~1e-9.
double axis_distance(const Geodesic& g1, const Geodesic& g2);

// Upper bound for the distance from the vertical axis (0, infinity) to the
// axis with finite endpoints u, v: the distance to the summit-adjacent point
// ((u+v)/2, |u-v|/2). Cheap diagnostic, also used to bracket searches.
double axis_distance_upper_vs_vertical(cpx u, cpx v);

// Euclidean radius of the isometric sphere of the conjugate of m acting on
// the ball model: 1 / (cosh dist(origin, axis) * sinh(length/2)).
// May exceed 1; the raw value is returned.
double ball_isometric_sphere_radius(const Mobius& m);  // throws not_loxodromic_error

} // namespace schottky
