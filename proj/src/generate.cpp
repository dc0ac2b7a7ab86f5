#include "schottky/generate.hpp"

#include <cmath>
#include <random>

#include "schottky/errors.hpp"

namespace schottky {

// centers sit at slot angles 2*pi*i/(2k), each jittered by up to 15% of a
// slot, so the tightest angular gap between neighbors is 70% of a slot
static constexpr double kJitter = 0.15;

double default_ring_radius(int rank, double radius) {
  if (rank < 1) throw domain_error("rank must be at least 1");
  if (!(radius > 0.0)) throw domain_error("radius must be positive");
  double worst_half_gap = (1.0 - 2.0 * kJitter) * M_PI / (2.0 * rank);
  return (2.0 * radius + 0.5) / (2.0 * std::sin(worst_half_gap));
}

Marking random_classical_marking(int rank, std::uint64_t seed, double radius,
                                 double ring_radius) {
  if (rank < 1) throw domain_error("rank must be at least 1");
  if (!(radius > 0.0)) throw domain_error("radius must be positive");
  double ring = ring_radius > 0.0 ? ring_radius : default_ring_radius(rank, radius);

  std::mt19937_64 rng(seed);
  auto unit = [&] { return (rng() >> 11) * 0x1p-53; };  // uniform in [0, 1)

  const int n = 2 * rank;
  const double slot = 2.0 * M_PI / n;
  std::vector<cpx> centers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; i++) {
    double ang = slot * (i + (unit() - 0.5) * 2.0 * kJitter);
    centers[static_cast<std::size_t>(i)] = ring * cpx(std::cos(ang), std::sin(ang));
  }

  Marking m;
  for (int i = 0; i < rank; i++) {
    cpx p = centers[static_cast<std::size_t>(i)];
    cpx q = centers[static_cast<std::size_t>(i + rank)];
    // gamma(z) = q - r^2/(z - p): carries circle(p, r) onto circle(q, r) and
    // the interior of the first to the exterior of the second, determinant 1
    m.generators.push_back(
        make_mobius(q / radius, -p * q / radius - radius, 1.0 / radius, -p / radius));
    m.disks.push_back(Disk::circle_in(p, radius));
    m.disks.push_back(Disk::circle_in(q, radius));
  }
  return m;
}

} // namespace schottky
