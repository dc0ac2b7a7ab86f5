#pragma once
#include <cstdint>

#include "schottky/marking.hpp"

namespace schottky {

// Ring radius that keeps 2k jittered circles of the given radius pairwise
// separated by at least 0.5 (worst case over the jitter range).
double default_ring_radius(int rank, double radius);

// Random classical marking: 2k disjoint circles of equal radius centered on a
// ring, circle i paired with circle i+k by the map whose isometric circles
// they are (c = 1/r, pole at the source center, image center at the target
// center), so the pairing and the determinant are exact by construction.
// A fixed rank/seed pins the center angles; varying `radius` against a fixed
// `ring_radius` therefore shrinks or grows the circles in place.
// ring_radius <= 0 selects the default. Output verifies at 1e-9.
Marking random_classical_marking(int rank, std::uint64_t seed, double radius,
                                 double ring_radius = 0.0);

} // namespace schottky
