#include "schottky/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "schottky/errors.hpp"
#include "schottky/words.hpp"

namespace schottky {

std::vector<double> displacements(const std::vector<Mobius>& gens, const HPt& x) {
  std::vector<double> d;
  d.reserve(gens.size());
  for (const Mobius& g : gens) d.push_back(hyp_distance(x, apply_halfspace(g, x)));
  return d;
}

// Neumaier-compensated accumulator, fixed input order
struct CompensatedSum {
  double s = 0.0, comp = 0.0;
  void add(double t) {
    double u = s + t;
    if (std::abs(s) >= std::abs(t)) comp += (s - u) + t;
    else comp += (t - u) + s;
    s = u;
  }
  double value() const { return s + comp; }
};

double displacement_sum(const std::vector<double>& d, double D) {
  CompensatedSum acc;
  for (double di : d) acc.add(1.0 / (1.0 + std::exp(D * di)));
  return acc.value();
}

CriticalBound critical_lower_bound(const std::vector<double>& d) {
  CriticalBound out;
  if (d.empty()) { out.rank_too_small = true; return out; }
  for (double di : d)
    if (!(di >= 0.0) || !std::isfinite(di)) throw domain_error("displacements must be finite and nonnegative");
  if (displacement_sum(d, 0.0) <= 0.5 + 1e-15) {
    out.rank_too_small = d.size() < 2;
    out.value = 0.0;
    return out;
  }
  double lo = 0.0, hi = 1.0;
  while (displacement_sum(d, hi) > 0.5) {
    hi *= 2.0;
    if (hi > 1e6) throw domain_error("sum never drops to 1/2 (zero displacements?)");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, hi); i++) {
    double mid = (lo + hi) / 2.0;
    (displacement_sum(d, mid) > 0.5 ? lo : hi) = mid;
  }
  out.value = (lo + hi) / 2.0;
  return out;
}

CriticalBound critical_lower_bound(const std::vector<Mobius>& gens, const HPt& x) {
  return critical_lower_bound(displacements(gens, x));
}

double uniform_displacement_bound(int k, double min_displacement) {
  if (k < 1 || !(min_displacement > 0.0)) throw domain_error("need k >= 1 and positive displacement");
  return std::log(static_cast<double>(2 * k - 1)) / min_displacement;
}

double partner_bound(double D, double d1, int k) {
  if (!(D > 0.0) || !(d1 > 0.0) || k < 2) throw domain_error("need D > 0, d1 > 0, k >= 2");
  double e = std::exp(D * d1);
  return std::log(((2.0 * k - 3.0) * e + (2.0 * k - 1.0)) / (e - 1.0)) / D;
}

// deepest shell depth whose cumulative word count fits the budget
static int effective_depth(int k, int max_len, std::uint64_t budget, bool* capped) {
  int n = max_len;
  while (n > 0 && words_up_to(k, n) > budget) n--;
  *capped = n < max_len;
  return n;
}

// displacements of all words, grouped by length, in enumeration order
static std::vector<std::vector<double>> shell_displacements(const std::vector<Mobius>& gens,
                                                            const HPt& x, int depth) {
  std::vector<std::vector<double>> shells(static_cast<std::size_t>(depth) + 1);
  walk_words(gens, depth, [&](const std::vector<std::int8_t>& w, const Mobius& m) {
    shells[w.size()].push_back(hyp_distance(x, apply_halfspace(m, x)));
  });
  return shells;
}

static double weighted_shell_sum(const std::vector<double>& d, double s) {
  CompensatedSum acc;
  for (double di : d) acc.add(std::exp(-s * di));
  return acc.value();
}

// root of S_n(s) / S_{n-1}(s) = 1 in s
static double shell_ratio_root(const std::vector<double>& prev, const std::vector<double>& cur) {
  auto ratio = [&](double s) { return weighted_shell_sum(cur, s) / weighted_shell_sum(prev, s); };
  if (ratio(0.0) <= 1.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (ratio(hi) > 1.0) {
    hi *= 2.0;
    if (hi > 1e4) throw domain_error("shell ratio never reaches 1");
  }
  for (int i = 0; i < 80 && hi - lo > 1e-8; i++) {
    double mid = (lo + hi) / 2.0;
    (ratio(mid) > 1.0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2.0;
}

SeriesReport series_estimate(const std::vector<Mobius>& gens, const HPt& x, int max_len,
                             std::uint64_t budget) {
  int k = static_cast<int>(gens.size());
  if (k < 1) throw domain_error("empty generator list");
  if (max_len < 2) throw domain_error("need at least two shells");
  SeriesReport rep;
  int depth = effective_depth(k, max_len, budget, &rep.capped);
  if (depth < 3) throw budget_exceeded_error("budget too small for three shells");
  rep.effective_len = depth;

  auto shells = shell_displacements(gens, x, depth);
  for (int n = 1; n <= depth; n++)
    rep.shell_counts.push_back(static_cast<std::uint64_t>(shells[static_cast<std::size_t>(n)].size()));

  for (int n = std::max(2, depth - 2); n <= depth; n++)
    rep.last_roots.push_back(shell_ratio_root(shells[static_cast<std::size_t>(n) - 1],
                                              shells[static_cast<std::size_t>(n)]));
  rep.exponent = rep.last_roots.back();
  rep.spread = *std::max_element(rep.last_roots.begin(), rep.last_roots.end()) -
               *std::min_element(rep.last_roots.begin(), rep.last_roots.end());
  return rep;
}

std::vector<double> shell_sums(const std::vector<Mobius>& gens, const HPt& x, int max_len,
                               std::uint64_t budget, double s) {
  bool capped = false;
  int depth = effective_depth(static_cast<int>(gens.size()), max_len, budget, &capped);
  auto shells = shell_displacements(gens, x, depth);
  std::vector<double> out;
  for (int n = 1; n <= depth; n++) out.push_back(weighted_shell_sum(shells[static_cast<std::size_t>(n)], s));
  return out;
}

OrbitSamples sample_limit_points(const std::vector<Mobius>& gens, int max_len,
                                 std::uint64_t budget, const HPt& x) {
  int k = static_cast<int>(gens.size());
  if (k < 1) throw domain_error("empty generator list");
  bool capped = false;
  int depth = effective_depth(k, max_len, budget, &capped);
  if (depth < 1) throw budget_exceeded_error("budget too small for one shell");
  OrbitSamples out;
  walk_words(gens, depth, [&](const std::vector<std::int8_t>& w, const Mobius& m) {
    if (classify(m) != MapClass::loxodromic) {
      out.skipped_non_loxodromic++;
      return;
    }
    out.points.push_back({static_cast<int>(w.size()), fixed_points(m).attracting(),
                          hyp_distance(x, apply_halfspace(m, x))});
  });
  return out;
}

BoxCount box_counting(const std::vector<cpx>& points, const std::vector<double>& scales) {
  if (points.size() < 1000) throw degenerate_scales_error("need at least 1000 points");
  if (scales.size() < 4) throw degenerate_scales_error("need at least 4 scales");
  double mn = *std::min_element(scales.begin(), scales.end());
  double mx = *std::max_element(scales.begin(), scales.end());
  if (!(mn > 0.0)) throw degenerate_scales_error("scales must be positive");
  if (mx / mn < 10.0) throw degenerate_scales_error("scales must span at least a decade");

  BoxCount bc;
  bc.scales = scales;
  std::sort(bc.scales.begin(), bc.scales.end());
  for (double eps : bc.scales) {
    std::unordered_set<std::uint64_t> cells;
    cells.reserve(points.size());
    for (cpx p : points) {
      auto ix = static_cast<std::int64_t>(std::floor(p.real() / eps));
      auto iy = static_cast<std::int64_t>(std::floor(p.imag() / eps));
      cells.insert((static_cast<std::uint64_t>(ix) << 32) ^
                   (static_cast<std::uint64_t>(iy) & 0xffffffffull));
    }
    bc.counts.push_back(cells.size());
  }
  // least squares of log N against log(1/eps)
  std::size_t n = bc.scales.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; i++) {
    double xlog = -std::log(bc.scales[i]);
    double ylog = std::log(static_cast<double>(bc.counts[i]));
    sx += xlog; sy += ylog; sxx += xlog * xlog; sxy += xlog * ylog;
  }
  double denom = n * sxx - sx * sx;
  bc.slope = denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
  return bc;
}

} // namespace schottky
