#pragma once
#include <array>
#include <vector>

#include "schottky/mobius.hpp"
#include "schottky/sphere.hpp"

namespace schottky {

// Closed disk on the sphere, bounded by a circle or a line.
//   circle + inside : |z - center| <= radius
//   circle + outside: |z - center| >= radius   (contains infinity)
//   halfplane       : Re(conj(normal) z) >= offset, |normal| == 1
//                     (boundary line passes through infinity)
struct Disk {
  enum class Kind { circle, halfplane };
  enum class Side { inside, outside };

  Kind kind = Kind::circle;
  Side side = Side::inside;  // circles only; a halfplane is its own side
  cpx center{0.0, 0.0};
  double radius = 1.0;
  cpx normal{1.0, 0.0};
  double offset = 0.0;

  static Disk circle_in(cpx c, double r);
  static Disk circle_out(cpx c, double r);
  static Disk halfplane(cpx n, double off);
};

bool disk_contains(const Disk& d, const SpherePt& p);

// Euclidean distance from a point to the disk (0 inside); +inf for the point
// at infinity against a bounded disk.
double distance_to_disk(const Disk& d, const SpherePt& p);

// Signed separation: positive iff the two disks are disjoint, and then equal
// to the Euclidean gap between them. Pairs that can never be disjoint (two
// unbounded disks with non-antiparallel boundaries, etc.) report -inf.
double disk_margin(const Disk& d1, const Disk& d2);

// How far apart the boundary curves are as curves: |dc| + |dr| for circles,
// normal/offset difference for lines (orientation-free), +inf across kinds.
double boundary_residual(const Disk& d1, const Disk& d2);

Disk complement(const Disk& d);

std::array<SpherePt, 3> boundary_points(const Disk& d);

// a few points strictly inside, used to resolve the side of image disks
std::vector<SpherePt> interior_probes(const Disk& d);

// Image of a disk under a Mobius map: exact via the images of three boundary
// points; the side of the image is fixed by an interior probe.
Disk image_disk(const Mobius& m, const Disk& d);

} // namespace schottky
