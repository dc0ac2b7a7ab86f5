#include <doctest.h>

#include <cmath>

#include "schottky/certificate.hpp"
#include "schottky/errors.hpp"
#include "schottky/marking.hpp"

#include "helpers.hpp"

using namespace schottky;
using testutil::mobius_with_fps;

TEST_CASE("normalized pair: fixed points -+1, eigenvalue 2") {
  Mobius g = mobius_with_fps(cpx(-1, 0), cpx(1, 0), 2.0);
  CertificatePair cert = disjoint_pair(g);

  // closed forms: radius |z_+ - z_-| L/(L^2-1) = 4/3 each, center separation
  // |z_+ - z_-| (L^2+1)/(L^2-1) = 10/3 for L = 2
  CHECK(cert.disk_plus.radius == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(cert.disk_minus.radius == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(cert.disk_plus.center - cert.disk_minus.center) ==
        doctest::Approx(10.0 / 3.0).epsilon(1e-12));
  CHECK(cert.radius_sum == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  CHECK(cert.radius_closed_form == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(cert.separation_closed_form == doctest::Approx(10.0 / 3.0).epsilon(1e-12));
  CHECK(cert.formula_residual < 1e-12);

  // disks disjoint with the conservative margin: 10/3 - 8/3 = 2/3 minus the
  // 1e-7 safety haircut
  CHECK(cert.margin == doctest::Approx(2.0 / 3.0 - 1e-7).epsilon(1e-9));
  CHECK(cert.map_margin > 0.0);

  // each disk contains its fixed point
  CHECK(disk_contains(cert.disk_plus, SpherePt(1.0, 0.0)));
  CHECK(disk_contains(cert.disk_minus, SpherePt(-1.0, 0.0)));

  // the construction chain composes to the frame that drives the circles
  Mobius frame = cert.theta * cert.psi * cert.phi;
  CHECK(chordal(apply(frame.inverse(), SpherePt(-1.0, 0.0)), SpherePt(cpx(0, 0))) < 1e-10);
  CHECK(chordal(apply(frame.inverse(), SpherePt(1.0, 0.0)), SpherePt::infinity()) < 1e-10);

  CertificateCheck chk = verify_certificate(cert);
  CHECK(chk.ok);
  CHECK(chk.pairing_residual < 1e-9);
  CHECK(chk.radius_residual < 1e-9);
  CHECK(chk.probe_margin > 0.0);
}

TEST_CASE("radius sum depends only on the fixed-point gap and eigenvalue") {
  // fixed points 1 and 3 with eigenvalue 2: same gap as -+1, same radius sum
  CertificatePair cert = disjoint_pair(mobius_with_fps(cpx(1, 0), cpx(3, 0), 2.0));
  CHECK(cert.radius_sum == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  CHECK(verify_certificate(cert).ok);
}

TEST_CASE("certificate pairs map source onto target exactly") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; i++) {
    Mobius g = testutil::random_loxodromic(rng, 2.05, 30.0, 0.1, 5.0);
    CertificatePair cert = disjoint_pair(g);
    FixedPoints fp = fixed_points(g);
    const Disk& src = fp.attracting_is_plus ? cert.disk_minus : cert.disk_plus;
    const Disk& tgt = fp.attracting_is_plus ? cert.disk_plus : cert.disk_minus;
    // boundary carried exactly onto the target boundary, interior onto the
    // complement (the far side)
    Disk img = image_disk(g, src);
    CHECK(boundary_residual(img, tgt) < 1e-8);
    CHECK(img.side != tgt.side);
    CHECK(verify_certificate(cert).ok);
  }
}

TEST_CASE("certificate construction is similarity covariant") {
  Mobius g = mobius_with_fps(cpx(-1, 0), cpx(1, 0), 2.0);
  Mobius s = make_mobius(3, cpx(0, 1), 0, 1.0 / 3.0);  // z -> 9z + 3i
  CertificatePair moved = disjoint_pair(s * g * s.inverse());
  CHECK(moved.radius_sum == doctest::Approx(9.0 * 8.0 / 3.0).epsilon(1e-9));
  CHECK(std::abs(moved.disk_plus.center - moved.disk_minus.center) ==
        doctest::Approx(9.0 * 10.0 / 3.0).epsilon(1e-9));
  CHECK(verify_certificate(moved).ok);
}

TEST_CASE("non-loxodromic and infinite-fixed-point inputs are rejected") {
  CHECK_THROWS_AS(disjoint_pair(make_mobius(1, 1, 0, 1)), not_loxodromic_error);
  CHECK_THROWS_AS(disjoint_pair(make_mobius(std::polar(1.0, 0.4), 0, 0, std::polar(1.0, -0.4))),
                  not_loxodromic_error);
  // diagonal loxodromic fixes 0 and infinity: no finite disk pair exists
  CHECK_THROWS_AS(disjoint_pair(make_mobius(2, 0, 0, 0.5)), fixed_point_at_pole_error);
}

TEST_CASE("tampering with a certificate fails the recheck") {
  CertificatePair cert = disjoint_pair(mobius_with_fps(cpx(-1, 0), cpx(1, 0), 2.0));
  CertificatePair bad = cert;
  bad.disk_plus.center += 0.2;  // no longer the exact image circle
  CertificateCheck chk = verify_certificate(bad);
  CHECK(!chk.ok);

  CertificatePair bloated = cert;
  bloated.disk_plus.radius *= 1.6;
  bloated.disk_minus.radius *= 1.6;  // 32/15 each: disks now overlap
  CHECK(!verify_certificate(bloated).ok);
}
