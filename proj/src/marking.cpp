#include "schottky/marking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schottky/errors.hpp"

namespace schottky {

VerificationReport verify_marking(const Marking& m, double tol) {
  std::size_t k = m.generators.size();
  if (k == 0) throw malformed_marking_error("marking has no generators");
  if (m.disks.size() != 2 * k)
    throw malformed_marking_error("marking needs exactly 2k disks");
  for (std::size_t i = 0; i < k; i++)
    if (classify(m.generators[i]) != MapClass::loxodromic)
      throw malformed_marking_error("generator " + std::to_string(i + 1) + " is not loxodromic");
  for (std::size_t i = 0; i < m.disks.size(); i++)
    for (std::size_t j = i + 1; j < m.disks.size(); j++)
      if (boundary_residual(m.disks[i], m.disks[j]) <= tol)
        throw malformed_marking_error("duplicate disk boundaries");

  VerificationReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m.disks.size(); i++)
    for (std::size_t j = i + 1; j < m.disks.size(); j++) {
      double mg = disk_margin(m.disks[i], m.disks[j]);
      rep.margins.push_back({i, j, mg});
      rep.min_margin = std::min(rep.min_margin, mg);
      if (!(mg > tol))
        rep.failures.push_back("disks " + std::to_string(i) + " and " + std::to_string(j) +
                               " are not separated");
    }

  for (std::size_t i = 0; i < k; i++) {
    Disk img = image_disk(m.generators[i], m.paired_source(i));
    const Disk& tgt = m.paired_target(i);
    double res = boundary_residual(img, tgt);
    // the image must be the complement of the target: same boundary, other side
    double comp_res = boundary_residual(img, complement(tgt));
    bool sides = comp_res < std::numeric_limits<double>::infinity() &&
                 ((img.kind == Disk::Kind::circle && tgt.kind == Disk::Kind::circle &&
                   img.side != tgt.side) ||
                  (img.kind == Disk::Kind::halfplane && tgt.kind == Disk::Kind::halfplane &&
                   std::abs(img.normal + tgt.normal) <= 1e-6));
    rep.residuals.push_back(res);
    rep.side_ok.push_back(sides);
    if (!(res <= tol))
      rep.failures.push_back("generator " + std::to_string(i + 1) +
                             " does not map its source boundary onto its target boundary");
    if (!sides)
      rep.failures.push_back("generator " + std::to_string(i + 1) +
                             " maps its disk over the paired disk (wrong side)");
  }

  rep.verified = rep.failures.empty();
  return rep;
}

} // namespace schottky
