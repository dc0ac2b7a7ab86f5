#pragma once
#include <cstdint>
#include <vector>

#include "schottky/hyperbolic.hpp"
#include "schottky/mobius.hpp"

namespace schottky {

inline const HPt kDefaultBasepoint{cpx(0.0, 0.0), 1.0};

// displacements d(x, g x) of the basepoint under each generator (not the
// inverses: the sum criterion below is stated for the generator set itself)
std::vector<double> displacements(const std::vector<Mobius>& gens, const HPt& x = kDefaultBasepoint);

// F(D) = sum_i 1 / (1 + exp(D d_i)), compensated summation in input order
double displacement_sum(const std::vector<double>& d, double D);

// Rigorous lower bound for the critical exponent: the root of F(D) = 1/2.
// F(0) = n/2, so with a single displacement the root is 0 (rank_too_small).
struct CriticalBound {
  double value = 0.0;
  bool rank_too_small = false;
};
CriticalBound critical_lower_bound(const std::vector<double>& d);
CriticalBound critical_lower_bound(const std::vector<Mobius>& gens, const HPt& x = kDefaultBasepoint);

// log(2k-1)/D: the bound when all k displacements equal D's critical value
double uniform_displacement_bound(int k, double min_displacement);

// Given one generator's displacement d1 and a bound exponent D, every further
// generator of a k-generator family satisfying the sum criterion moves the
// basepoint at least this far:
//   (1/D) log( ((2k-3) e^(D d1) + (2k-1)) / (e^(D d1) - 1) )
// For k = 2 this is the two-generator partner bound (1/D) log((e^(D d1)+3)/(e^(D d1)-1)).
double partner_bound(double D, double d1, int k);

// Poincare-series estimate: per-shell weighted sums S_n(s) = sum e^{-s d(x,wx)}
// over reduced words of length n; the reported exponent is the s making the
// last shell ratio S_N / S_{N-1} equal 1. No extrapolation: the roots of the
// last three shells and their spread are reported as-is.
struct SeriesReport {
  double exponent = 0.0;
  std::vector<double> last_roots;  // up to three trailing shell-ratio roots
  double spread = 0.0;             // max - min of last_roots
  int effective_len = 0;           // shells actually enumerated
  bool capped = false;             // true if the budget shortened max_len
  std::vector<std::uint64_t> shell_counts;
};

// Enumerates shells up to max_len, shrinking the depth so the total word
// count stays within budget; throws budget_exceeded_error only if fewer than
// three shells fit.
SeriesReport series_estimate(const std::vector<Mobius>& gens, const HPt& x = kDefaultBasepoint,
                             int max_len = 10, std::uint64_t budget = 5000000);

// evaluate the shell sums at a fixed exponent (diagnostics / CSV output)
std::vector<double> shell_sums(const std::vector<Mobius>& gens, const HPt& x, int max_len,
                               std::uint64_t budget, double s);

struct OrbitSample {
  int length;
  SpherePt point;       // attracting fixed point of the word map (may be inf)
  double displacement;  // d(x, w x)
};

struct OrbitSamples {
  std::vector<OrbitSample> points;
  std::uint64_t skipped_non_loxodromic = 0;
};

// one sample per reduced word of length <= max_len, deterministic order
OrbitSamples sample_limit_points(const std::vector<Mobius>& gens, int max_len,
                                 std::uint64_t budget = 5000000, const HPt& x = kDefaultBasepoint);

struct BoxCount {
  double slope = 0.0;  // least-squares dimension estimate
  std::vector<double> scales;
  std::vector<std::uint64_t> counts;
};

// Occupied-cell counts over a grid at each scale and the log-log slope.
// Requires >= 1000 points and >= 4 positive scales spanning at least a
// decade (throws degenerate_scales_error otherwise).
BoxCount box_counting(const std::vector<cpx>& points, const std::vector<double>& scales);

} // namespace schottky
