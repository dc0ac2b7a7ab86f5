#pragma once
#include <utility>

#include "schottky/disk.hpp"
#include "schottky/mobius.hpp"

namespace schottky {

// A pair of disjoint round disks certified for a single loxodromic map with
// finite nonzero fixed points: one disk around each fixed point, radius
//   r = |z_+ - z_-| |lambda| / (|lambda|^2 - 1)
// each, built as exact circle images through the normalizing chain
//   (conjugate the axis to (0, infinity)) -> circles |x| = |lambda|^(+-1)
//   -> x -> (x-1)/(x+1) -> translate -> scale back.
// The map sends the interior of the disk at the repelling fixed point onto
// the complement of the disk at the attracting one.
struct CertificatePair {
  Mobius gamma;
  Disk disk_plus;    // contains z_+
  Disk disk_minus;   // contains z_-
  Mobius phi, psi, theta;    // construction chain; frame = theta * psi * phi
  double radius_sum;         // r + r', equals |z_+ - z_-| 2|lambda| / (|lambda|^2 - 1)
  double formula_residual;   // |computed radius sum - closed form| (relative)
  double margin;             // separation of the two disks, minus 1e-7 (conservative)
  double map_margin;         // worst probe clearance of gamma(source) past the target
  // closed forms the construction should reproduce (the disks themselves are
  // exact circle images; both values are recorded for comparison)
  double radius_closed_form;      // |z_+ - z_-| |lambda| / (|lambda|^2 - 1), per disk
  double separation_closed_form;  // |z_+ - z_-| (|lambda|^2 + 1) / (|lambda|^2 - 1)
};

// throws not_loxodromic_error / fixed_point_at_pole_error
CertificatePair disjoint_pair(const Mobius& gamma);

struct CertificateCheck {
  bool ok = false;
  double disk_margin = 0.0;      // recomputed separation
  double pairing_residual = 0.0; // image of source boundary vs target boundary
  double probe_margin = 0.0;     // min clearance over boundary+interior probes
  double radius_residual = 0.0;  // relative deviation from the closed form
};

// Re-checks a certificate from scratch (geometry only, independent of the
// construction trace): disk disjointness, the boundary pairing, the radius
// formula, and the mapping condition on 64 boundary + 16 interior probes.
CertificateCheck verify_certificate(const CertificatePair& cert, double tol = 1e-9);

} // namespace schottky
