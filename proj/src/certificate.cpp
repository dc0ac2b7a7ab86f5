#include "schottky/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schottky/errors.hpp"

namespace schottky {

static const double kConservative = 1e-7;

CertificatePair disjoint_pair(const Mobius& gamma) {
  Multiplier mult = multiplier(gamma);  // throws if not loxodromic
  FixedPoints fp = fixed_points(gamma);
  if (fp.plus.inf || fp.minus.inf ||
      std::abs(fp.plus.z) == 0.0 || std::abs(fp.minus.z) == 0.0)
    throw fixed_point_at_pole_error("certificate needs fixed points away from 0 and infinity");

  cpx zp = fp.plus.z, zm = fp.minus.z;
  double al = std::abs(mult.lambda);
  if (!(al > 1.0)) throw degenerate_modulus_error();

  // frame map: 0 -> -1 -> z_-, infinity -> 1 -> z_+
  Mobius phi = make_mobius(1.0, -1.0, 1.0, 1.0);            // x -> (x-1)/(x+1)
  Mobius psi = make_mobius(1.0, (zp + zm) / (zp - zm), 0.0, 1.0);
  cpx s = std::sqrt((zp - zm) / 2.0);
  Mobius theta = make_mobius(s, 0.0, 0.0, 1.0 / s);
  Mobius frame = theta * psi * phi;

  Disk src_minus = Disk::circle_in(0.0, 1.0 / al);   // holds the frame image of z_-
  Disk src_plus = Disk::circle_out(0.0, al);         // holds the frame image of z_+

  CertificatePair cert;
  cert.gamma = gamma;
  cert.phi = phi;
  cert.psi = psi;
  cert.theta = theta;
  cert.disk_minus = image_disk(frame, src_minus);
  cert.disk_plus = image_disk(frame, src_plus);
  if (!disk_contains(cert.disk_plus, fp.plus) || !disk_contains(cert.disk_minus, fp.minus))
    std::swap(cert.disk_plus, cert.disk_minus);  // containment decides the tags

  double closed_form = std::abs(zp - zm) * 2.0 * al / (al * al - 1.0);
  cert.radius_sum = cert.disk_plus.radius + cert.disk_minus.radius;
  cert.formula_residual = std::abs(cert.radius_sum - closed_form) / closed_form;
  cert.margin = disk_margin(cert.disk_plus, cert.disk_minus) - kConservative;
  cert.radius_closed_form = closed_form / 2.0;
  cert.separation_closed_form = std::abs(zp - zm) * (al * al + 1.0) / (al * al - 1.0);

  CertificateCheck chk = verify_certificate(cert);
  cert.map_margin = chk.probe_margin - kConservative;
  return cert;
}

CertificateCheck verify_certificate(const CertificatePair& cert, double tol) {
  CertificateCheck chk;
  const Mobius& g = cert.gamma;
  FixedPoints fp = fixed_points(g);
  const Disk& src = fp.attracting_is_plus ? cert.disk_minus : cert.disk_plus;
  const Disk& dst = fp.attracting_is_plus ? cert.disk_plus : cert.disk_minus;

  chk.disk_margin = disk_margin(cert.disk_plus, cert.disk_minus);

  Disk img = image_disk(g, src);
  chk.pairing_residual = boundary_residual(img, dst);

  double al = std::abs(fp.lambda);
  double closed_form = std::abs(fp.plus.z - fp.minus.z) * 2.0 * al / (al * al - 1.0);
  chk.radius_residual =
      std::abs(cert.disk_plus.radius + cert.disk_minus.radius - closed_form) / closed_form;

  // push probes slightly inside the source disk; their images must clear the
  // target disk's interior
  const int kBoundary = 64, kInterior = 16;
  const double inset = 1.0 - 1e-6;
  chk.probe_margin = std::numeric_limits<double>::infinity();
  // image points must stay clear of the target disk, so their distance to it
  // is the margin (0 would mean a probe landed in or on the target)
  auto feed = [&](cpx p) {
    chk.probe_margin = std::min(chk.probe_margin, distance_to_disk(dst, apply(g, SpherePt(p))));
  };
  for (int i = 0; i < kBoundary; i++) {
    double ang = 2.0 * M_PI * i / kBoundary;
    feed(src.center + src.radius * inset * cpx(std::cos(ang), std::sin(ang)));
  }
  for (int i = 0; i < kInterior; i++) {
    double ang = 2.0 * M_PI * i / kInterior;
    feed(src.center + src.radius * 0.5 * cpx(std::cos(ang), std::sin(ang)));
  }

  chk.ok = chk.disk_margin > tol && chk.pairing_residual <= 1e-6 &&
           chk.probe_margin > 0.0 && chk.radius_residual <= 1e-6;
  return chk;
}

} // namespace schottky
