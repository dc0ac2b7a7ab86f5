#include "schottky/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "schottky/certificate.hpp"
#include "schottky/errors.hpp"
#include "schottky/interaction.hpp"

namespace schottky {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kNaN = std::numeric_limits<double>::quiet_NaN();

// improvements below this are treated as a plateau, both when the greedy stage
// accepts a move and when a generator competes against its own inverse
constexpr double kPlateau = 1e-12;

// relative distance below which a center modulus counts as hugging a band edge
constexpr double kEdgeNear = 1e-2;

Mobius to_zero_inf(const SpherePt& p, const SpherePt& q) {
  if (p.inf) return make_mobius(0.0, 1.0, 1.0, -q.z);
  if (q.inf) return make_mobius(1.0, -p.z, 0.0, 1.0);
  return make_mobius(1.0, -p.z, 1.0, -q.z);
}

void conjugate_all(std::vector<Mobius>& gens, const Mobius& h) {
  const Mobius hinv = h.inverse();
  for (Mobius& g : gens) g = normalized(h * g * hinv);
}

// streaming free reduction: appending x after its inverse cancels both
void push_letter(std::vector<std::int8_t>& acc, std::int8_t x) {
  if (!acc.empty() && acc.back() == (x ^ 1)) acc.pop_back();
  else acc.push_back(x);
}

void append_word(Word& acc, const Word& w) {
  for (std::int8_t x : w.letters) push_letter(acc.letters, x);
}

Word word_power(const Word& w, long n) {
  const Word base = n < 0 ? w.inverse() : w;
  Word out;
  for (long r = n < 0 ? -n : n; r > 0; r--) append_word(out, base);
  return out;
}

void require_diagonal(const Mobius& m) {
  double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
  if (std::abs(m.b) > 1e-10 * scale || std::abs(m.c) > 1e-10 * scale)
    throw need_standard_position_error();
}

// half-open modulus band relative to the expanding entry of a diagonal map
struct BandLimits {
  double lo, hi;
};

BandLimits band_limits(const Mobius& alpha, Band band) {
  require_diagonal(alpha);
  double la = std::abs(alpha.a);
  if (la < 1.0) throw need_standard_position_error("expanding diagonal entry must come first");
  if (la <= 1.0 + 1e-12) throw degenerate_modulus_error();
  double l2 = la * la;
  if (band == Band::above_unit) return {1.0, l2};
  return {1.0 / l2, 1.0};
}

Move mk_swap(int i, int j) {
  Move m;
  m.kind = Move::Kind::swap;
  m.i = i;
  m.j = j;
  return m;
}

Move mk_standardize(int i) {
  Move m;
  m.kind = Move::Kind::standardize;
  m.i = i;
  return m;
}

Move mk_invert(int i) {
  Move m;
  m.kind = Move::Kind::invert;
  m.i = i;
  return m;
}

Move mk_power(int i, long k, long l) {
  Move m;
  m.kind = Move::Kind::power;
  m.i = i;
  m.k = k;
  m.l = l;
  return m;
}

Move mk_premultiply(int i, long k) {
  Move m;
  m.kind = Move::Kind::premultiply;
  m.i = i;
  m.k = k;
  return m;
}

Move mk_rescale(double c) {
  Move m;
  m.kind = Move::Kind::rescale;
  m.c = c;
  return m;
}

} // namespace

std::string move_str(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case Move::Kind::standardize: os << "standardize(" << m.i << ")"; break;
    case Move::Kind::power: os << "power(" << m.i << ", " << m.k << ", " << m.l << ")"; break;
    case Move::Kind::premultiply:
      os << "premultiply(" << m.i << ", " << (m.k > 0 ? "+" : "") << m.k << ")";
      break;
    case Move::Kind::invert: os << "invert(" << m.i << ")"; break;
    case Move::Kind::rescale:
      os.precision(17);
      os << "rescale(" << m.c << ")";
      break;
    case Move::Kind::swap: os << "swap(" << m.i << ", " << m.j << ")"; break;
  }
  return os.str();
}

Mobius mobius_power(const Mobius& m, long n) {
  if (n == 0) return Mobius{};
  Mobius base = n < 0 ? m.inverse() : m;
  unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  Mobius acc{};
  while (e != 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return normalized(acc);
}

MoveState::MoveState(std::vector<Mobius> initial) : gens(std::move(initial)) {
  if (gens.empty()) throw malformed_marking_error("no generators");
  words.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); i++) {
    gens[i] = normalized(gens[i]);
    words.push_back(Word{{static_cast<std::int8_t>(2 * i)}});
  }
}

void MoveState::apply(const Move& m) {
  const int n = static_cast<int>(gens.size());
  auto check = [&](int idx) {
    if (idx < 0 || idx >= n) throw domain_error("move index out of range");
  };
  switch (m.kind) {
    case Move::Kind::standardize: {
      check(m.i);
      FixedPoints fp = fixed_points(gens[m.i]);
      Mobius h = to_zero_inf(fp.minus, fp.plus);
      conjugate_all(gens, h);
      conj = normalized(h * conj);
      // snap to the exact diagonal carrying the eigenvalue of the plus slot
      cpx mu = fp.attracting_is_plus ? fp.lambda : cpx{1.0} / fp.lambda;
      gens[m.i] = make_mobius(mu, 0.0, 0.0, cpx{1.0} / mu);
      break;
    }
    case Move::Kind::power: {
      check(m.i);
      if (m.i == 0) throw domain_error("power move rewrites only non-first generators");
      Mobius p = mobius_power(gens[0], m.k);
      Mobius q = mobius_power(gens[0], m.l);
      gens[m.i] = normalized(p * gens[m.i] * q);
      Word w = word_power(words[0], m.k);
      append_word(w, words[m.i]);
      append_word(w, word_power(words[0], m.l));
      words[m.i] = std::move(w);
      break;
    }
    case Move::Kind::premultiply: {
      check(m.i);
      if (m.i == 0) throw domain_error("premultiply rewrites only non-first generators");
      if (m.k != 1 && m.k != -1) throw domain_error("premultiply exponent must be +-1");
      gens[m.i] = normalized(mobius_power(gens[0], m.k) * gens[m.i]);
      Word w = word_power(words[0], m.k);
      append_word(w, words[m.i]);
      words[m.i] = std::move(w);
      break;
    }
    case Move::Kind::invert: {
      check(m.i);
      gens[m.i] = normalized(gens[m.i].inverse());
      words[m.i] = words[m.i].inverse();
      break;
    }
    case Move::Kind::rescale: {
      if (!(m.c > 0.0) || !std::isfinite(m.c))
        throw domain_error("rescale factor must be positive and finite");
      double s = std::sqrt(m.c);
      Mobius h = make_mobius(s, 0.0, 0.0, 1.0 / s);
      conjugate_all(gens, h);
      conj = normalized(h * conj);
      break;
    }
    case Move::Kind::swap: {
      check(m.i);
      check(m.j);
      std::swap(gens[m.i], gens[m.j]);
      std::swap(words[m.i], words[m.j]);
      break;
    }
  }
}

Word translate_word(const Word& w, const std::vector<Word>& words) {
  Word out;
  for (std::int8_t x : w.letters) {
    std::size_t idx = static_cast<std::size_t>(x >> 1);
    if (x < 0 || idx >= words.size()) throw domain_error("letter outside the generator range");
    const Word part = (x & 1) ? words[idx].inverse() : words[idx];
    append_word(out, part);
  }
  return out;
}

MoveState replay(const std::vector<Mobius>& original, const std::vector<Move>& moves) {
  MoveState st(original);
  for (const Move& m : moves) st.apply(m);
  return st;
}

Placement annulus_powers(const Mobius& alpha, const Mobius& beta, Band band) {
  const BandLimits bl = band_limits(alpha, band);
  double az, ae;
  try {
    az = std::abs(zeta(beta));
    ae = std::abs(eta(beta));
  } catch (const infinite_fixed_point_error&) {
    throw degenerate_center_error();
  }
  if (!(az > 0.0) || !std::isfinite(az) || !(ae > 0.0) || !std::isfinite(ae))
    throw degenerate_center_error();

  // zeta scales by lambda^{2k} and eta by lambda^{-2l}; start from the rounded
  // logs and nudge until the moduli of the actual product matrix land in the
  // band — membership must hold for the matrices as stored, not the ideal law
  const double step = 2.0 * std::log(std::abs(alpha.a));
  long k = -static_cast<long>(std::floor(std::log(az / bl.lo) / step));
  long l = static_cast<long>(std::floor(std::log(ae / bl.lo) / step));
  for (int guard = 0;; guard++) {
    if (guard > 8) throw degenerate_center_error("annulus placement failed to settle");
    double zm, em;
    try {
      Mobius g = normalized(mobius_power(alpha, k) * beta * mobius_power(alpha, l));
      zm = std::abs(zeta(g));
      em = std::abs(eta(g));
    } catch (const infinite_fixed_point_error&) {
      throw degenerate_center_error();
    }
    if (!std::isfinite(zm) || !std::isfinite(em)) throw degenerate_center_error();
    if (zm < bl.lo) { k++; continue; }
    if (zm >= bl.hi) { k--; continue; }
    if (em < bl.lo) { l--; continue; }
    if (em >= bl.hi) { l++; continue; }
    return {k, l, zm, em};
  }
}

std::vector<MoveRecord> annulus_pass(MoveState& st, Band band) {
  const BandLimits bl = band_limits(st.gens[0], band);
  const double width = bl.hi - bl.lo;
  auto edge = [&](double m) {
    double p = (m - bl.lo) / width;
    return std::min(p, 1.0 - p);
  };
  auto sharpness = [&](const Placement& p) { return std::min(edge(p.zeta_mod), edge(p.eta_mod)); };

  std::vector<MoveRecord> recs;
  for (std::size_t i = 1; i < st.gens.size(); i++) {
    Placement direct = annulus_powers(st.gens[0], st.gens[i], band);
    Placement flipped = annulus_powers(st.gens[0], normalized(st.gens[i].inverse()), band);
    bool flip = sharpness(flipped) > sharpness(direct) + kPlateau;
    if (flip) {
      Move inv = mk_invert(static_cast<int>(i));
      st.apply(inv);
      MoveRecord r;
      r.move = inv;
      r.accepted = true;
      r.note = "inverse sits deeper in the band";
      recs.push_back(std::move(r));
    }
    const Placement& pl = flip ? flipped : direct;
    Move pw = mk_power(static_cast<int>(i), pl.k, pl.l);

    double pz = (pl.zeta_mod - bl.lo) / width;
    double pe = (pl.eta_mod - bl.lo) / width;
    bool zlow = pz < kEdgeNear, elow = pe < kEdgeNear;
    MoveRecord r;
    r.move = pw;
    r.note = zlow && elow ? "case I" : elow ? "case II" : zlow ? "case III" : "case IV";

    Mobius placed = normalized(mobius_power(st.gens[0], pl.k) * st.gens[i] *
                               mobius_power(st.gens[0], pl.l));
    if (classify(placed) != MapClass::loxodromic) {
      r.note += "; skipped: composite not loxodromic";
    } else if (pl.k != 0 || pl.l != 0) {
      st.apply(pw);
      r.accepted = true;
    }
    recs.push_back(std::move(r));
  }
  return recs;
}

std::vector<double> rescale_candidates(const std::vector<Mobius>& gens) {
  if (gens.empty()) throw malformed_marking_error("no generators");
  require_diagonal(gens[0]);
  const double la = std::abs(gens[0].a);
  if (la <= 1.0) throw need_standard_position_error("expanding diagonal entry must come first");
  const double l2 = la * la;

  double all_max = 0.0;            // over both center moduli
  double zeta_max = 0.0;           // over zeta moduli only
  double zeta_min = kInf;
  double delta = kInf;             // worst relative gap to the band ceiling
  double chi = 0.0;                // worst omega * |tr|
  std::vector<double> traces;
  for (std::size_t i = 1; i < gens.size(); i++) {
    double z, e;
    try {
      z = std::abs(zeta(gens[i]));
      e = std::abs(eta(gens[i]));
    } catch (const infinite_fixed_point_error&) {
      continue;
    }
    if (!std::isfinite(z) || !std::isfinite(e) || z <= 0.0 || e <= 0.0) continue;
    all_max = std::max({all_max, z, e});
    zeta_max = std::max(zeta_max, z);
    zeta_min = std::min(zeta_min, z);
    delta = std::min({delta, (l2 - z) / l2, (l2 - e) / l2});
    double t = std::abs(gens[i].tr());
    chi = std::max(chi, omega(gens[i]) * t);
    traces.push_back(t);
  }
  if (!(all_max > 0.0)) return {};
  delta = std::max(0.0, delta);

  double eps = kInf;
  for (double t : traces) eps = std::min(eps, delta * (la - 1.0) - (t > 0.0 ? chi / t : kInf));
  eps = std::max(0.0, eps);
  double ehat = std::clamp(delta * (la - 1.0) / (2.0 * la), 0.0, 0.5);

  std::vector<double> raw;
  raw.push_back(1.0 / std::sqrt(all_max));       // center the moduli around 1
  raw.push_back((1.0 + eps / (2.0 * all_max)) / la);  // hug the lower annulus edge
  raw.push_back(1.0 / (la * (1.0 - ehat)));           // same, gap-proportional lift
  raw.push_back(la / std::sqrt(zeta_max));       // push the widest zeta to mid-band
  double rho = zeta_min - 1.0;                   // zeta excess above the band floor
  if (rho > 1e-12) raw.push_back(std::sqrt(la / std::sqrt(rho)));

  std::vector<double> out;
  for (double c : raw) {
    if (!(c > 0.0) || !std::isfinite(c)) continue;
    if (std::abs(c - 1.0) <= 1e-12) continue;
    bool dup = false;
    for (double o : out)
      if (std::abs(c - o) <= 1e-9 * std::max(c, o)) { dup = true; break; }
    if (!dup) out.push_back(c);
  }
  return out;
}

Marking propose_marking(const std::vector<Mobius>& gens, double trace_split) {
  if (gens.empty()) throw malformed_marking_error("no generators");
  require_diagonal(gens[0]);
  const double la = std::abs(gens[0].a);
  if (la <= 1.0 + 1e-12) throw degenerate_modulus_error();

  Marking m;
  m.generators = gens;
  m.disks.push_back(Disk::circle_in(0.0, 1.0 / la));
  m.disks.push_back(Disk::circle_out(0.0, la));
  for (std::size_t i = 1; i < gens.size(); i++) {
    if (std::abs(gens[i].tr()) >= trace_split) {
      IsometricCircles ic = isometric_circles(gens[i]);
      m.disks.push_back(Disk::circle_in(ic.of_map.center, ic.of_map.radius));
      m.disks.push_back(Disk::circle_in(ic.of_inverse.center, ic.of_inverse.radius));
    } else {
      CertificatePair cert = disjoint_pair(gens[i]);
      bool plus_attracts = fixed_points(gens[i]).attracting_is_plus;
      m.disks.push_back(plus_attracts ? cert.disk_minus : cert.disk_plus);
      m.disks.push_back(plus_attracts ? cert.disk_plus : cert.disk_minus);
    }
  }
  return m;
}

std::string outcome_str(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::classical_found: return "classical_found";
    case SearchOutcome::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

SearchReport search_classical(const std::vector<Mobius>& gens, int budget, double tol,
                              Band band) {
  SearchReport rep;
  MoveState st(gens);
  const int k = static_cast<int>(st.gens.size());

  auto evaluate = [&](const std::vector<Mobius>& g, Marking* mk, VerificationReport* vr) {
    try {
      Marking m = propose_marking(g);
      VerificationReport v = verify_marking(m, tol);
      double s = v.min_margin;
      if (mk) *mk = std::move(m);
      if (vr) *vr = std::move(v);
      return s;
    } catch (const error&) {
      return -kInf;
    }
  };

  auto full_diag = [&](const std::vector<Mobius>& g, double margin) {
    MoveDiagnostics d;
    d.min_margin = margin;
    double mt = kInf;
    for (const Mobius& m : g) mt = std::min(mt, std::abs(m.tr()));
    d.min_abs_trace = mt;
    try {
      d.kappa_value = kappa(g).value;
    } catch (const error&) {
      d.kappa_value = kNaN;
    }
    return d;
  };

  // One full round on a state: least-trace generator first, standard
  // position with the expanding entry leading, every other generator pushed
  // into the band, then each rescale candidate tried and the best improving
  // one kept. Returns the margin of the tested proposal. Every tested
  // rescale charges one budget unit; bookkeeping moves are free. Probes run
  // this silently on a copy (record = false); accepted rounds record it.
  auto pipeline = [&](MoveState& s, bool record, Marking* out_mk,
                      VerificationReport* out_vr) -> double {
    auto book = [&](const Move& mv, const char* note) {
      s.apply(mv);
      if (record) {
        rep.moves.push_back(mv);
        MoveRecord r;
        r.move = mv;
        r.accepted = true;
        r.note = note;
        rep.trace.push_back(std::move(r));
      }
    };
    int lead = 0;
    for (int i = 1; i < k; i++)
      if (std::abs(s.gens[i].tr()) < std::abs(s.gens[lead].tr())) lead = i;
    if (lead != 0) book(mk_swap(0, lead), "least |tr| leads");
    book(mk_standardize(0), "fix {0, inf}");
    if (std::abs(s.gens[0].a) < 1.0) book(mk_invert(0), "expanding entry first");
    if (std::abs(s.gens[0].a) <= 1.0 + 1e-12) throw degenerate_modulus_error();
    {
      std::vector<MoveRecord> recs = annulus_pass(s, band);
      if (record)
        for (MoveRecord& r : recs) {
          if (r.accepted) rep.moves.push_back(r.move);
          rep.trace.push_back(std::move(r));
        }
    }

    Marking mk;
    VerificationReport vr;
    double cur = evaluate(s.gens, &mk, &vr);
    if (!vr.verified) {
      std::vector<double> scales;
      try {
        scales = rescale_candidates(s.gens);
      } catch (const error&) {
      }
      Move best_mv;
      double best_sc = cur;
      bool improved = false;
      for (double c : scales) {
        if (rep.budget_used >= budget) break;
        rep.budget_used++;
        Move mv = mk_rescale(c);
        double sc;
        try {
          MoveState t = s;
          t.apply(mv);
          sc = evaluate(t.gens, nullptr, nullptr);
        } catch (const error&) {
          sc = -kInf;
        }
        if (record) {
          MoveRecord r;
          r.move = mv;
          r.before.min_margin = cur;
          r.after.min_margin = sc;
          rep.trace.push_back(std::move(r));
        }
        if (sc > best_sc + kPlateau) {
          best_sc = sc;
          best_mv = mv;
          improved = true;
        }
      }
      if (improved) {
        s.apply(best_mv);
        double before = cur;
        cur = evaluate(s.gens, &mk, &vr);
        if (record) {
          rep.moves.push_back(best_mv);
          MoveRecord r;
          r.move = best_mv;
          r.accepted = true;
          r.before.min_margin = before;
          r.after = full_diag(s.gens, cur);
          rep.trace.push_back(std::move(r));
        }
      }
    }
    if (out_mk) *out_mk = std::move(mk);
    if (out_vr) *out_vr = std::move(vr);
    return cur;
  };

  Marking cur_mk;
  VerificationReport cur_vr;
  double best = pipeline(st, true, &cur_mk, &cur_vr);
  MoveDiagnostics cur_diag = full_diag(st.gens, best);
  rep.best_margin = best;

  while (true) {
    if (cur_vr.verified) {
      rep.outcome = SearchOutcome::classical_found;
      rep.found = true;
      break;
    }
    if (rep.budget_used >= budget) {
      rep.outcome = SearchOutcome::budget_exhausted;
      break;
    }

    // Nielsen candidates, each scored through a fresh round of the pipeline
    // (probing the candidate costs one unit on top of its pipeline rescales)
    std::vector<Move> cands;
    for (int i = 1; i < k; i++) cands.push_back(mk_invert(i));
    for (int i = 1; i < k; i++) {
      cands.push_back(mk_premultiply(i, 1));
      cands.push_back(mk_premultiply(i, -1));
    }

    Move best_mv;
    bool improved = false;
    double best_score = best;
    for (const Move& mv : cands) {
      if (rep.budget_used >= budget) break;
      rep.budget_used++;
      double s;
      try {
        MoveState trial = st;
        trial.apply(mv);
        s = pipeline(trial, false, nullptr, nullptr);
      } catch (const error&) {
        s = -kInf;
      }
      MoveRecord r;
      r.move = mv;
      r.before = cur_diag;
      r.after.min_margin = s;
      rep.trace.push_back(std::move(r));
      if (s > best_score + kPlateau) {
        best_score = s;
        best_mv = mv;
        improved = true;
      }
    }

    if (!improved) {
      // either the budget ran out mid-scan or no candidate improves; further
      // probes of the same plateau cannot change the answer
      rep.outcome = SearchOutcome::budget_exhausted;
      break;
    }

    // commit: the candidate itself, then the recorded round it was scored by
    MoveRecord accepted;
    accepted.move = best_mv;
    accepted.accepted = true;
    accepted.before = cur_diag;
    rep.trace.push_back(accepted);
    std::size_t at = rep.trace.size() - 1;
    st.apply(best_mv);
    rep.moves.push_back(best_mv);
    best = pipeline(st, true, &cur_mk, &cur_vr);
    cur_diag = full_diag(st.gens, best);
    rep.trace[at].after = cur_diag;
    rep.best_margin = std::max(rep.best_margin, best);
  }

  rep.marking = cur_mk;
  rep.verification = cur_vr;
  rep.conj = st.conj;
  rep.words = st.words;
  return rep;
}

} // namespace schottky
