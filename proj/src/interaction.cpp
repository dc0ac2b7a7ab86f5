#include "schottky/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schottky/certificate.hpp"
#include "schottky/errors.hpp"

namespace schottky {

static const double kInf = std::numeric_limits<double>::infinity();

ZReport z_quantities(const Mobius& beta) {
  FixedPoints fp = fixed_points(beta);
  ZReport rep;
  if (fp.plus.inf || fp.minus.inf ||
      std::abs(fp.plus.z) == 0.0 || std::abs(fp.minus.z) == 0.0) {
    rep.fixed_point_at_pole = true;
    return rep;  // both quantities collapse to 0
  }
  cpx zp = fp.plus.z, zm = fp.minus.z;
  rep.z_beta = std::min(std::abs(zm - zp), std::abs(1.0 / zm - 1.0 / zp));
  rep.z_pair = std::min({rep.z_beta, std::abs(zp), std::abs(zm),
                         1.0 / std::abs(zp), 1.0 / std::abs(zm)});
  return rep;
}

double r_value(const Mobius& gamma) {
  Multiplier mult = multiplier(gamma);
  FixedPoints fp = fixed_points(gamma);
  if (fp.plus.inf || fp.minus.inf) return kInf;
  return std::abs(fp.plus.z - fp.minus.z) / (std::abs(mult.lambda) - 1.0);
}

double exclusion_gap(const std::pair<Disk, Disk>& disks, const Mobius& beta) {
  FixedPoints fp = fixed_points(beta);
  double g = kInf;
  for (const SpherePt& z : {fp.plus, fp.minus})
    for (const Disk* d : {&disks.first, &disks.second})
      g = std::min(g, distance_to_disk(*d, z));
  return g;
}

double omega(const Mobius& beta) {
  FixedPoints fp = fixed_points(beta);
  cpx zt = zeta(beta), et = eta(beta);  // throws if c == 0
  if (fp.plus.inf || fp.minus.inf) return kInf;
  double pair1 = std::max(std::abs(fp.plus.z - zt), std::abs(fp.minus.z - et));
  double pair2 = std::max(std::abs(fp.minus.z - zt), std::abs(fp.plus.z - et));
  return std::min(pair1, pair2);
}

KappaReport kappa(const std::vector<Mobius>& gens, double trace_threshold) {
  if (gens.empty()) throw domain_error("empty generator list");
  const Mobius& alpha = gens[0];
  if (std::max(std::abs(alpha.b), std::abs(alpha.c)) > 1e-10)
    throw need_standard_position_error();

  KappaReport rep;
  rep.value = kInf;
  rep.branch = '-';
  for (std::size_t i = 1; i < gens.size(); i++) {
    for (std::size_t j = i + 1; j < gens.size(); j++) {
      std::size_t lo = i, hi = j;
      if (std::abs(gens[lo].tr()) > std::abs(gens[hi].tr())) std::swap(lo, hi);
      KappaPairValue pv{lo, hi, kInf, 'A'};
      if (std::abs(gens[lo].tr()) > trace_threshold) {
        cpx cs[2] = {zeta(gens[lo]), eta(gens[lo])};
        cpx ct[2] = {zeta(gens[hi]), eta(gens[hi])};
        double best = kInf;
        for (cpx a : cs)
          for (cpx b : ct) best = std::min(best, std::abs(a - b));
        pv.value = best * std::abs(gens[lo].tr());
        pv.branch = 'A';
      } else {
        pv.branch = 'B';
        try {
          CertificatePair cert = disjoint_pair(gens[lo]);
          double g = exclusion_gap({cert.disk_plus, cert.disk_minus}, gens[hi]);
          pv.value = g / r_value(gens[hi]);
        } catch (const error&) {
          pv.value = 0.0;  // degenerate geometry: maximally pessimistic
        }
      }
      rep.pairs.push_back(pv);
      if (pv.value < rep.value) {
        rep.value = pv.value;
        rep.branch = pv.branch;
      }
    }
  }
  return rep;
}

} // namespace schottky
