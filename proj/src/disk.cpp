#include "schottky/disk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schottky/errors.hpp"

namespace schottky {

static const double kInf = std::numeric_limits<double>::infinity();

Disk Disk::circle_in(cpx c, double r) {
  if (!(r > 0.0)) throw domain_error("circle radius must be positive");
  Disk d; d.kind = Kind::circle; d.side = Side::inside; d.center = c; d.radius = r;
  return d;
}

Disk Disk::circle_out(cpx c, double r) {
  Disk d = circle_in(c, r);
  d.side = Side::outside;
  return d;
}

Disk Disk::halfplane(cpx n, double off) {
  double a = std::abs(n);
  if (!(a > 0.0)) throw domain_error("halfplane normal must be nonzero");
  Disk d; d.kind = Kind::halfplane; d.normal = n / a; d.offset = off / a;
  return d;
}

bool disk_contains(const Disk& d, const SpherePt& p) {
  return distance_to_disk(d, p) == 0.0;
}

double distance_to_disk(const Disk& d, const SpherePt& p) {
  if (d.kind == Disk::Kind::halfplane) {
    if (p.inf) return 0.0;  // infinity lies on the boundary line
    double s = d.offset - (std::conj(d.normal) * p.z).real();
    return std::max(0.0, s);
  }
  if (p.inf) return d.side == Disk::Side::outside ? 0.0 : kInf;
  double dist = std::abs(p.z - d.center);
  if (d.side == Disk::Side::inside) return std::max(0.0, dist - d.radius);
  return std::max(0.0, d.radius - dist);
}

double disk_margin(const Disk& d1, const Disk& d2) {
  using K = Disk::Kind;
  using S = Disk::Side;
  if (d1.kind == K::circle && d2.kind == K::circle) {
    double dc = std::abs(d1.center - d2.center);
    if (d1.side == S::inside && d2.side == S::inside) return dc - d1.radius - d2.radius;
    if (d1.side == S::inside && d2.side == S::outside) return d2.radius - dc - d1.radius;
    if (d1.side == S::outside && d2.side == S::inside) return d1.radius - dc - d2.radius;
    return -kInf;  // two unbounded disks always overlap near infinity
  }
  if (d1.kind == K::halfplane && d2.kind == K::halfplane) {
    // disjoint only when the normals are antiparallel (a separating slab)
    if (std::abs(d1.normal + d2.normal) > 1e-9) return -kInf;
    return d1.offset + d2.offset;
  }
  const Disk& hp = d1.kind == K::halfplane ? d1 : d2;
  const Disk& ci = d1.kind == K::halfplane ? d2 : d1;
  if (ci.side == S::outside) return -kInf;  // unbounded vs halfplane always meets
  double s = (std::conj(hp.normal) * ci.center).real();
  return (hp.offset - s) - ci.radius;
}

static cpx canonical_normal(cpx n, double& off) {
  if (n.real() < 0.0 || (n.real() == 0.0 && n.imag() < 0.0)) { off = -off; return -n; }
  return n;
}

double boundary_residual(const Disk& d1, const Disk& d2) {
  if (d1.kind != d2.kind) return kInf;
  if (d1.kind == Disk::Kind::circle)
    return std::abs(d1.center - d2.center) + std::abs(d1.radius - d2.radius);
  double o1 = d1.offset, o2 = d2.offset;
  cpx n1 = canonical_normal(d1.normal, o1), n2 = canonical_normal(d2.normal, o2);
  return std::abs(n1 - n2) + std::abs(o1 - o2);
}

Disk complement(const Disk& d) {
  Disk r = d;
  if (d.kind == Disk::Kind::circle)
    r.side = d.side == Disk::Side::inside ? Disk::Side::outside : Disk::Side::inside;
  else { r.normal = -d.normal; r.offset = -d.offset; }
  return r;
}

std::array<SpherePt, 3> boundary_points(const Disk& d) {
  if (d.kind == Disk::Kind::circle) {
    cpx c = d.center; double r = d.radius;
    return {SpherePt(c + r), SpherePt(c + cpx(0, 1) * r), SpherePt(c - r)};
  }
  cpx p0 = d.normal * d.offset;             // closest boundary point to 0
  cpx t = d.normal * cpx(0, 1);             // direction along the line
  return {SpherePt(p0), SpherePt(p0 + t), SpherePt(p0 - t)};
}

std::vector<SpherePt> interior_probes(const Disk& d) {
  if (d.kind == Disk::Kind::halfplane) {
    cpx p0 = d.normal * d.offset;
    return {SpherePt(p0 + d.normal), SpherePt(p0 + 2.0 * d.normal),
            SpherePt(p0 + d.normal * cpx(1.0, 0.5))};
  }
  cpx c = d.center; double r = d.radius;
  if (d.side == Disk::Side::inside)
    return {SpherePt(c), SpherePt(c + 0.5 * r), SpherePt(c + cpx(0, 0.5) * r),
            SpherePt(c - 0.25 * r)};
  return {SpherePt::infinity(), SpherePt(c + 2.0 * r), SpherePt(c + cpx(0, 3.0) * r),
          SpherePt(c - 4.0 * r)};
}

// boundary curve through three distinct image points; side left undetermined
struct RawBoundary {
  bool is_line;
  cpx center;    // circle
  double radius;
  cpx normal;    // line
  double offset;
};

static RawBoundary line_through(cpx p, cpx q) {
  cpx t = q - p;
  cpx n = t * cpx(0, 1) / std::abs(t);
  return {true, 0, 0, n, (std::conj(n) * p).real()};
}

static RawBoundary boundary_through(const SpherePt& w1, const SpherePt& w2, const SpherePt& w3) {
  // any image at infinity means the boundary is a line
  if (w1.inf) return line_through(w2.z, w3.z);
  if (w2.inf) return line_through(w1.z, w3.z);
  if (w3.inf) return line_through(w1.z, w2.z);
  cpx A = w2.z - w1.z, B = w3.z - w1.z;
  double cross = (std::conj(A) * B).imag();
  double scale = std::abs(A) * std::abs(B);
  if (std::abs(cross) <= 1e-14 * scale) return line_through(w1.z, w2.z);
  // perpendicular-bisector system for q = center - w1:
  //   2 Re(conj(q) A) = |A|^2,  2 Re(conj(q) B) = |B|^2
  double a11 = A.real(), a12 = A.imag();
  double a21 = B.real(), a22 = B.imag();
  double b1 = std::norm(A) / 2.0, b2 = std::norm(B) / 2.0;
  double det = a11 * a22 - a12 * a21;  // == -cross/..., nonzero here
  cpx q((b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det);
  return {false, w1.z + q, std::abs(q), 0, 0};
}

Disk image_disk(const Mobius& m, const Disk& d) {
  auto bp = boundary_points(d);
  RawBoundary rb = boundary_through(apply(m, bp[0]), apply(m, bp[1]), apply(m, bp[2]));
  for (const SpherePt& probe : interior_probes(d)) {
    SpherePt q = apply(m, probe);
    if (rb.is_line) {
      if (q.inf) continue;  // on the boundary line
      double s = (std::conj(rb.normal) * q.z).real() - rb.offset;
      if (std::abs(s) <= 1e-13 * std::max(1.0, std::abs(q.z))) continue;
      return s > 0.0 ? Disk::halfplane(rb.normal, rb.offset)
                     : Disk::halfplane(-rb.normal, -rb.offset);
    }
    if (q.inf) return Disk::circle_out(rb.center, rb.radius);
    double s = std::abs(q.z - rb.center) - rb.radius;
    if (std::abs(s) <= 1e-13 * std::max(1.0, rb.radius)) continue;
    return s < 0.0 ? Disk::circle_in(rb.center, rb.radius)
                   : Disk::circle_out(rb.center, rb.radius);
  }
  throw domain_error("could not resolve the side of an image disk");
}

} // namespace schottky
