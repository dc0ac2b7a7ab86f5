// Acceptance suite: one self-contained check per shipped guarantee, each
// printing exactly one PASS/FAIL line. Exit code is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "schottky/certificate.hpp"
#include "schottky/dimension.hpp"
#include "schottky/errors.hpp"
#include "schottky/generate.hpp"
#include "schottky/hyperbolic.hpp"
#include "schottky/io.hpp"
#include "schottky/marking.hpp"
#include "schottky/normalization.hpp"
#include "schottky/words.hpp"

#include "helpers.hpp"

using namespace schottky;
using testutil::uniform;

namespace {

int failures = 0;

struct check_failure {
  std::string msg;
};

void need(bool cond, const std::string& msg) {
  if (!cond) throw check_failure{msg};
}

std::string fmt(double x, const char* spec = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void run(int n, const std::function<std::string()>& body) {
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const check_failure& f) {
    ok = false;
    detail = f.msg;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("unexpected exception: ") + e.what();
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << "\n";
  if (!ok) failures++;
}

int cli(const std::string& args) {
  std::string cmd = std::string(SCHOTTKY_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

// the varied-rank marking family shared by criteria 4 and 5
Marking suite_marking(int i) {
  int rank = 2 + i % 3;
  double radius = 0.3 + 0.02 * i;
  return random_classical_marking(rank, 1000 + static_cast<std::uint64_t>(i), radius);
}

// 1. Certified disjoint-disk pairs for random loxodromic maps: the two radii
//    sum to |z+ - z-| 2|lambda| / (|lambda|^2 - 1), the disks are disjoint,
//    and the map check passes on all probes. 1000 maps in under 5 seconds.
std::string criterion1() {
  Timer tm;
  std::mt19937_64 rng(101);
  double worst_rel = 0.0, worst_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; i++) {
    Mobius m = testutil::random_loxodromic(rng, 2.05, 50.0, 0.1, 5.0);
    CertificatePair cert = disjoint_pair(m);
    FixedPoints fp = fixed_points(m);
    double al = std::abs(fp.lambda);
    double closed = std::abs(fp.plus.z - fp.minus.z) * 2.0 * al / (al * al - 1.0);
    double rel = std::abs(cert.radius_sum - closed) / closed;
    worst_rel = std::max(worst_rel, rel);
    worst_margin = std::min(worst_margin, cert.margin);
    need(rel <= 1e-9, "radius-sum identity off by " + fmt(rel) + " (map " + std::to_string(i) + ")");
    need(cert.margin > 0.0, "disks not disjoint (map " + std::to_string(i) + ")");
    CertificateCheck chk = verify_certificate(cert);
    need(chk.ok, "probe re-check failed (map " + std::to_string(i) + ")");
  }
  double secs = tm.seconds();
  need(secs <= 5.0, "took " + fmt(secs) + " s (limit 5)");
  return "1000 certificates, worst radius residual " + fmt(worst_rel) + ", min margin " +
         fmt(worst_margin) + ", " + fmt(secs) + " s";
}

// 2. Pinned instance: fixed points +-1, |lambda| = 2 gives radii 4/3 and
//    center separation 10/3, to 1e-12.
std::string criterion2() {
  Mobius m = make_mobius(1.25, 0.75, 0.75, 1.25);  // fps +-1, multiplier 2, exact entries
  CertificatePair cert = disjoint_pair(m);
  double rp = cert.disk_plus.radius, rm = cert.disk_minus.radius;
  double sep = std::abs(cert.disk_plus.center - cert.disk_minus.center);
  need(std::abs(rp - 4.0 / 3.0) <= 1e-12, "radius at z+ is " + fmt(rp, "%.15g"));
  need(std::abs(rm - 4.0 / 3.0) <= 1e-12, "radius at z- is " + fmt(rm, "%.15g"));
  need(std::abs(sep - 10.0 / 3.0) <= 1e-12, "center separation is " + fmt(sep, "%.15g"));
  return "radii 4/3, separation 10/3 (errors " + fmt(std::abs(rp - 4.0 / 3.0)) + ", " +
         fmt(std::abs(sep - 10.0 / 3.0)) + ")";
}

// 3. The displacement-sum bound solves the pinned cases exactly: equal
//    displacements log 3 over two generators and log 5 over three both give
//    exponent 1 (to 1e-10), and the partner bound at k = 2 matches its
//    two-generator closed form to 1e-12.
std::string criterion3() {
  double two = critical_lower_bound({std::log(3.0), std::log(3.0)}).value;
  need(std::abs(two - 1.0) <= 1e-10, "k=2, d=log3 root is " + fmt(two, "%.15g"));
  double three =
      critical_lower_bound({std::log(5.0), std::log(5.0), std::log(5.0)}).value;
  need(std::abs(three - 1.0) <= 1e-10, "k=3, d=log5 root is " + fmt(three, "%.15g"));
  double worst = 0.0;
  for (double D : {0.3, 0.7, 1.0, 1.6})
    for (double d1 : {0.5, 1.0, 2.0, 4.0}) {
      double e = std::exp(D * d1);
      double closed = std::log((e + 3.0) / (e - 1.0)) / D;
      worst = std::max(worst, std::abs(partner_bound(D, d1, 2) - closed));
    }
  need(worst <= 1e-12, "partner bound differs from two-generator form by " + fmt(worst));
  return "pinned roots exact to " + fmt(std::max(std::abs(two - 1.0), std::abs(three - 1.0))) +
         ", partner-bound residual " + fmt(worst);
}

// 4. On 20 random classical markings of rank 2..4 with varying radii, the
//    rigorous lower bound stays below the series estimate (+0.05 slack),
//    depth 10, 5e6-word budget, under 60 seconds total.
std::string criterion4() {
  Timer tm;
  double worst_gap = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; i++) {
    Marking m = suite_marking(i);
    double low = critical_lower_bound(m.generators).value;
    double series = series_estimate(m.generators, kDefaultBasepoint, 10, 5000000).exponent;
    worst_gap = std::max(worst_gap, low - series);
    need(low <= series + 0.05, "marking " + std::to_string(i) + ": D_low " + fmt(low) +
                                   " exceeds D_series " + fmt(series) + " + 0.05");
  }
  double secs = tm.seconds();
  need(secs <= 60.0, "took " + fmt(secs) + " s (limit 60)");
  return "20 markings, max D_low - D_series = " + fmt(worst_gap) + ", " + fmt(secs) + " s";
}

// 5. For every verified marking in the suite, the attracting fixed point of
//    every reduced word of length <= 5 lies inside the union of the marked
//    disks: zero violations.
std::string criterion5() {
  std::vector<Marking> suite;
  Marking rank1;
  rank1.generators = {make_mobius(2, 0, 0, 0.5)};
  rank1.disks = {Disk::circle_in(cpx(0, 0), 0.5), Disk::circle_out(cpx(0, 0), 2)};
  suite.push_back(rank1);
  Marking four;
  four.generators = {make_mobius(2, 3, 1, 2), make_mobius(cpx(0, 2), -5, 1, cpx(0, 2))};
  four.disks = {Disk::circle_in(cpx(-2, 0), 1), Disk::circle_in(cpx(2, 0), 1),
                Disk::circle_in(cpx(0, -2), 1), Disk::circle_in(cpx(0, 2), 1)};
  suite.push_back(four);
  for (int i = 0; i < 20; i++) suite.push_back(suite_marking(i));

  std::uint64_t words = 0, violations = 0;
  for (const Marking& m : suite) {
    need(verify_marking(m).verified, "a suite marking failed verification");
    walk_words(m.generators, 5, [&](const std::vector<std::int8_t>&, const Mobius& w) {
      words++;
      if (classify(w) != MapClass::loxodromic) {
        violations++;
        return;
      }
      SpherePt p = fixed_points(w).attracting();
      bool inside = false;
      for (const Disk& d : m.disks) inside = inside || disk_contains(d, p);
      if (!inside) violations++;
    });
  }
  need(violations == 0, std::to_string(violations) + " attracting fixed points escaped the disks");
  return std::to_string(suite.size()) + " markings, " + std::to_string(words) +
         " words, zero violations";
}

// 6. For loxodromic maps whose axis passes through the ball origin, the
//    boundary traces of the two isometric spheres project stereographically
//    to circles of radius 1/|lambda| and |lambda|, checked at 32 points each
//    to 1e-9 (the trace height comes from the isometric-sphere radius).
std::string criterion6() {
  double worst = 0.0;
  for (cpx lambda : {cpx(2.0, 0.0), std::polar(3.7, 0.7), std::polar(1.4, -2.1),
                     std::polar(2.0, 1.5707963267948966)}) {
    Mobius m = make_mobius(lambda, 0, 0, 1.0 / lambda);
    double al = std::abs(multiplier(m).lambda);
    double r = ball_isometric_sphere_radius(m);
    double h = 1.0 / std::sqrt(1.0 + r * r);  // trace height along the axis
    double rho = std::sqrt(1.0 - h * h);
    for (int j = 0; j < 32; j++) {
      double t = 2.0 * 3.141592653589793 * j / 32.0;
      // cap around the repelling end (south pole) and the attracting end
      SpherePt lo = from_sphere({rho * std::cos(t), rho * std::sin(t), -h});
      SpherePt hi = from_sphere({rho * std::cos(t), rho * std::sin(t), h});
      double e1 = std::abs(lo.abs() - 1.0 / al) / (1.0 / al);
      double e2 = std::abs(hi.abs() - al) / al;
      worst = std::max({worst, e1, e2});
      need(e1 <= 1e-9, "inner trace radius off by " + fmt(e1));
      need(e2 <= 1e-9, "outer trace radius off by " + fmt(e2));
      // the traces are exactly the unit-dilation locus of the map
      double dil = std::abs(chordal_derivative(m, lo) - 1.0);
      need(dil <= 1e-9, "dilation at the inner trace is off by " + fmt(dil));
    }
  }
  return "4 maps x 32 points, worst projected-radius error " + fmt(worst);
}

// 7. Band placement: for 1000 random (lambda, beta) the chosen powers put
//    both center moduli exactly into [1, |lambda|^2); replaying the recorded
//    pass reproduces the generators to 1e-9, and translated words agree with
//    the originals to 1e-8 on 5 random words per trial.
std::string criterion7() {
  std::mt19937_64 rng(707);
  auto random_word = [&](int len) {
    Word w;
    while (static_cast<int>(w.letters.size()) < len) {
      auto letter = static_cast<std::int8_t>(rng() % 4);
      if (!w.letters.empty() && (w.letters.back() ^ 1) == letter) continue;
      w.letters.push_back(letter);
    }
    return w;
  };
  for (int i = 0; i < 1000; i++) {
    cpx lambda = std::polar(std::exp(uniform(rng, std::log(1.05), std::log(3.0))),
                            uniform(rng, 0.0, 6.283185307179586));
    Mobius alpha = make_mobius(lambda, 0, 0, 1.0 / lambda);
    cpx zc = std::polar(std::exp(uniform(rng, std::log(0.05), std::log(20.0))),
                        uniform(rng, 0.0, 6.283185307179586));
    cpx ec = std::polar(std::exp(uniform(rng, std::log(0.05), std::log(20.0))),
                        uniform(rng, 0.0, 6.283185307179586));
    Mobius beta = testutil::mobius_with_centers(zc, ec);
    double L2 = std::abs(lambda) * std::abs(lambda);

    Placement pl = annulus_powers(alpha, beta);
    Mobius placed =
        normalized(mobius_power(alpha, pl.k) * beta * mobius_power(alpha, pl.l));
    double zm = std::abs(zeta(placed)), em = std::abs(eta(placed));
    need(zm >= 1.0 && zm < L2,
         "zeta modulus " + fmt(zm, "%.17g") + " outside [1, " + fmt(L2, "%.17g") + ")");
    need(em >= 1.0 && em < L2,
         "eta modulus " + fmt(em, "%.17g") + " outside [1, " + fmt(L2, "%.17g") + ")");

    std::vector<Mobius> original{alpha, beta};
    MoveState st(original);
    std::vector<MoveRecord> recs = annulus_pass(st);
    std::vector<Move> applied;
    for (const MoveRecord& r : recs)
      if (r.accepted) applied.push_back(r.move);
    MoveState redo = replay(original, applied);
    for (std::size_t g = 0; g < 2; g++)
      need(map_distance(redo.gens[g], st.gens[g]) <= 1e-9, "replay diverged");

    for (int w = 0; w < 5; w++) {
      Word word = random_word(1 + static_cast<int>(rng() % 6));
      Mobius direct = word_to_map(word, st.gens);
      Mobius via = st.conj * word_to_map(translate_word(word, st.words), original) *
                   st.conj.inverse();
      // equality as maps: probe the action (scale-free; entry representatives
      // of long products carry determinant-renormalization noise)
      for (SpherePt p : {SpherePt(cpx(0, 0)), SpherePt(cpx(1, 0)), SpherePt(cpx(0, 1)),
                         SpherePt::infinity()})
        need(chordal(apply(direct, p), apply(via, p)) <= 1e-8, "translated word diverged");
    }
  }
  return "1000 placements in band, replay and 5000 word maps agree";
}

// 8. Search recovery: 50 classical markings, conjugated by a random Mobius
//    map and scrambled by up to 3 Nielsen moves, are all brought back to a
//    verified classical marking within a budget of 200 moves, and each found
//    marking passes the command-line verifier at 1e-9. Under 30 seconds.
std::string criterion8() {
  Timer tm;
  std::mt19937_64 rng(808);
  int max_budget = 0;
  for (int i = 0; i < 50; i++) {
    Marking m = random_classical_marking(2, 2000 + static_cast<std::uint64_t>(i),
                                         0.3 + 0.006 * i);
    std::vector<Mobius> gens = m.generators;
    Mobius s = testutil::random_mobius(rng);
    for (Mobius& g : gens) g = normalized(s * g * s.inverse());
    int nscr = static_cast<int>(rng() % 4);
    for (int t = 0; t < nscr; t++) {
      std::size_t a = rng() % 2, b = 1 - a;
      switch (rng() % 3) {
        case 0: gens[a] = normalized(gens[a].inverse()); break;
        case 1:
          gens[a] = normalized(((rng() & 1) ? gens[b].inverse() : gens[b]) * gens[a]);
          break;
        default: std::swap(gens[0], gens[1]); break;
      }
    }
    SearchReport rep = search_classical(gens, 200);
    need(rep.found && rep.outcome == SearchOutcome::classical_found,
         "trial " + std::to_string(i) + " not recovered (budget used " +
             std::to_string(rep.budget_used) + ")");
    max_budget = std::max(max_budget, rep.budget_used);
    std::ofstream f("tmp_acceptance_found.json", std::ios::binary);
    f << serialize_group(from_marking(rep.marking));
    f.close();
    need(cli("verify tmp_acceptance_found.json --tol 1e-9") == 0,
         "trial " + std::to_string(i) + ": CLI verify rejected the found marking");
  }
  double secs = tm.seconds();
  need(secs <= 30.0, "took " + fmt(secs) + " s (limit 30)");
  return "50/50 recovered, max budget used " + std::to_string(max_budget) + ", " +
         fmt(secs) + " s";
}

// 9. Series sanity: a single generator has estimate ~0 (<= 0.02 at depth 12),
//    and shrinking every disk of a fixed rank-2 marking strictly decreases
//    the estimate by at least 0.05.
std::string criterion9() {
  double lone =
      series_estimate({make_mobius(2, 0, 0, 0.5)}, kDefaultBasepoint, 12).exponent;
  need(lone <= 0.02, "rank-1 estimate is " + fmt(lone));
  double ring = default_ring_radius(2, 0.6);
  double big = series_estimate(random_classical_marking(2, 21, 0.6, ring).generators,
                               kDefaultBasepoint, 10)
                   .exponent;
  double small = series_estimate(random_classical_marking(2, 21, 0.2, ring).generators,
                                 kDefaultBasepoint, 10)
                     .exponent;
  need(big - small >= 0.05, "shrinking moved the estimate from " + fmt(big) + " to " +
                                fmt(small) + " (gap " + fmt(big - small) + ")");
  return "rank-1 estimate " + fmt(lone) + "; radius 0.6 -> 0.2 drops " + fmt(big) +
         " -> " + fmt(small);
}

} // namespace

int main() {
  run(1, criterion1);
  run(2, criterion2);
  run(3, criterion3);
  run(4, criterion4);
  run(5, criterion5);
  run(6, criterion6);
  run(7, criterion7);
  run(8, criterion8);
  run(9, criterion9);
  return failures == 0 ? 0 : 1;
}
