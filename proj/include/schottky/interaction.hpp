#pragma once
#include <utility>
#include <vector>

#include "schottky/disk.hpp"
#include "schottky/mobius.hpp"

namespace schottky {

// Scale-free size of a generator relative to the standard annulus around
// |z| = 1:  Z(beta) = min(|z_- - z_+|, |1/z_- - 1/z_+|), and the pair value
// additionally takes the fixed-point moduli and their reciprocals into
// account. A fixed point at 0 or infinity collapses everything to 0.
struct ZReport {
  double z_beta = 0.0;
  double z_pair = 0.0;
  bool fixed_point_at_pole = false;
};
ZReport z_quantities(const Mobius& beta);

// R(gamma) = |z_- - z_+| / (|lambda| - 1): the scale of the smallest round
// disks that can work for gamma. Loxodromic only.
double r_value(const Mobius& gamma);

// Gap between a pair of exclusion disks and another map's fixed points:
// min over both fixed points and both disks of the point-to-disk distance.
double exclusion_gap(const std::pair<Disk, Disk>& disks, const Mobius& beta);

// Mismatch between the fixed points and the isometric-circle centers,
// min over the two possible pairings: max(|z-zeta|, |z'-eta|). Small omega
// means the high-trace approximation of fixed points by centers is good.
double omega(const Mobius& beta);

// Interaction strength of the generator family past the first (standard
// position) generator. For each pair taken with |tr_i| <= |tr_i'|:
//   branch A (|tr_i| > C): min center distance times |tr_i|, centers ranging
//     over {zeta, eta} of each map;
//   branch B (otherwise): exclusion gap of i's certified disk pair against
//     i's partner's fixed points, divided by R of the partner.
// The reported value is the minimum over pairs; with fewer than two
// non-first generators the minimum is vacuous (+inf).
struct KappaPairValue {
  std::size_t i, j;  // generator indices (into the full list)
  double value;
  char branch;  // 'A' or 'B'
};

struct KappaReport {
  double value;
  char branch;  // branch of the minimizing pair, '-' if vacuous
  std::vector<KappaPairValue> pairs;
};

KappaReport kappa(const std::vector<Mobius>& gens, double trace_threshold = 1e3);

} // namespace schottky
