#pragma once
#include <string>
#include <vector>

#include "schottky/disk.hpp"
#include "schottky/mobius.hpp"

namespace schottky {

// A marked Schottky configuration: k generators and 2k disks ordered
// D_1, D_1', D_2, D_2', ...; generator i pairs D_i with D_i':
//   g_i(boundary of D_i) = boundary of D_i', and g_i maps the interior of
//   D_i onto the complement of D_i' (so the images never re-enter).
struct Marking {
  std::vector<Mobius> generators;
  std::vector<Disk> disks;

  std::size_t rank() const { return generators.size(); }
  const Disk& paired_source(std::size_t i) const { return disks[2 * i]; }
  const Disk& paired_target(std::size_t i) const { return disks[2 * i + 1]; }
};

struct PairMargin {
  std::size_t i, j;  // disk indices
  double margin;
};

struct VerificationReport {
  bool verified = false;
  double min_margin = 0.0;             // worst pairwise disk separation
  std::vector<PairMargin> margins;     // all unordered disk pairs
  std::vector<double> residuals;       // per generator: image boundary vs target boundary
  std::vector<bool> side_ok;           // per generator: image side opposes the target side
  std::vector<std::string> failures;   // human-readable reasons
};

// Structural problems (rank 0, wrong disk count, duplicated boundaries,
// non-loxodromic generators) throw malformed_marking_error; geometric
// failures come back in the report with verified == false.
VerificationReport verify_marking(const Marking& m, double tol = 1e-9);

} // namespace schottky
