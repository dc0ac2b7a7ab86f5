#pragma once
#include <limits>
#include <string>
#include <vector>

#include "schottky/marking.hpp"
#include "schottky/mobius.hpp"
#include "schottky/words.hpp"

namespace schottky {

// Moves on a generator system. Every move either rewrites the tuple inside
// the same group (a Nielsen move) or conjugates the whole configuration:
//   standardize i    conjugate so gens[i] fixes {0, inf}; gens[i] snaps to an
//                    exact diagonal matrix
//   power i k l      gens[i] <- gens[0]^k gens[i] gens[0]^l   (i >= 1)
//   premultiply i k  gens[i] <- gens[0]^k gens[i]             (k = +-1)
//   invert i         gens[i] <- gens[i]^-1
//   rescale c        conjugate everything by z -> c z         (c > 0)
//   swap i j         exchange gens[i] and gens[j]
struct Move {
  enum class Kind { standardize, power, premultiply, invert, rescale, swap };

  Kind kind = Kind::invert;
  int i = 0, j = 0;
  long k = 0, l = 0;
  double c = 1.0;
};

std::string move_str(const Move& m);

Mobius mobius_power(const Mobius& m, long n);

// Current generators plus a witness that the group never changed: conj is the
// accumulated global conjugation and words[i] spells gens[i] in the original
// generators, so gens[i] == conj * words[i](original) * conj^-1 (up to the
// rounding introduced when standardize snaps to a diagonal).
struct MoveState {
  std::vector<Mobius> gens;
  Mobius conj;
  std::vector<Word> words;

  explicit MoveState(std::vector<Mobius> initial);
  void apply(const Move& m);
};

// rewrite a word over the current generators as a word over the originals
Word translate_word(const Word& w, const std::vector<Word>& words);

// apply a recorded move sequence from scratch (deterministic)
MoveState replay(const std::vector<Mobius>& original, const std::vector<Move>& moves);

// Half-open band of moduli the isometric-circle centers are pushed into,
// relative to L = |multiplier of gens[0]|: either [1, L^2) or [L^-2, 1).
enum class Band { above_unit, below_unit };

// Exponents (k, l) such that alpha^k beta alpha^l has both center moduli in
// the band. alpha must be diagonal diag(lambda, 1/lambda) with |lambda| > 1;
// the centers transform as zeta -> lambda^{2k} zeta, eta -> lambda^{-2l} eta,
// so each exponent is a rounded log, then nudged until the moduli computed
// from the actual product matrix satisfy the half-open membership.
struct Placement {
  long k = 0, l = 0;
  double zeta_mod = 0.0;  // |zeta| after the move
  double eta_mod = 0.0;   // |eta| after the move
};
Placement annulus_powers(const Mobius& alpha, const Mobius& beta, Band band = Band::above_unit);

// Snapshot of the quantities the search watches: worst pairwise disk margin
// of the proposed marking (-inf when no marking can be proposed), the
// interaction value kappa, and the smallest |tr|. NaN = not computed.
struct MoveDiagnostics {
  double min_margin = std::numeric_limits<double>::quiet_NaN();
  double kappa_value = std::numeric_limits<double>::quiet_NaN();
  double min_abs_trace = std::numeric_limits<double>::quiet_NaN();
};

// One evaluated move with the state diagnostics before and after it. Rejected
// candidates are recorded too (accepted == false); their "after" side holds
// whatever was computed while probing.
struct MoveRecord {
  Move move;
  bool accepted = false;
  MoveDiagnostics before, after;
  std::string note;
};

// For every generator past the first: pick the sharper of beta / beta^-1
// (larger distance of both center moduli from the band edges), then apply the
// placing power move; a placement whose composite matrix is not loxodromic is
// recorded but skipped. gens[0] must already be an exact diagonal. Records
// carry an edge-proximity tag per generator: with p = position of a modulus
// in the band scaled to [0, 1) and a 1e-2 threshold,
//   case I   both centers hug the lower edge,
//   case II  only eta does,  case III  only zeta does,
//   case IV  neither does.
std::vector<MoveRecord> annulus_pass(MoveState& st, Band band = Band::above_unit);

// Conjugation scales worth trying from the current configuration (gens[0]
// diagonal, remaining center moduli ideally already in the band). Deduplicated,
// positive, identity dropped. The leading candidate 1/sqrt(max modulus) maps
// [1, L^2) placements strictly inside the fundamental annulus (1/L, L).
std::vector<double> rescale_candidates(const std::vector<Mobius>& gens);

// Disk proposal for generators in standard position: gens[0] keeps the
// fundamental annulus' boundary circles |z| = 1/L and |z| = L; every other
// generator gets its isometric circles when |tr| >= trace_split and the
// certified round-disk pair otherwise.
Marking propose_marking(const std::vector<Mobius>& gens, double trace_split = 6.0);

enum class SearchOutcome { classical_found, budget_exhausted };

std::string outcome_str(SearchOutcome o);

struct SearchReport {
  SearchOutcome outcome = SearchOutcome::budget_exhausted;
  bool found = false;
  Marking marking;                  // meaningful iff found
  VerificationReport verification;  // of the final proposal
  double best_margin = -std::numeric_limits<double>::infinity();
  Mobius conj;                      // accumulated conjugation
  std::vector<Word> words;          // final generators spelled in the originals
  std::vector<Move> moves;          // applied moves, replayable in order
  std::vector<MoveRecord> trace;    // every move evaluated, applied or not
  int budget_used = 0;
};

// Drive a generator tuple toward a verified classical marking: bring the
// least-trace generator to standard position, place the others into the
// fundamental band, then greedily try rescales, inversions and premultiplies,
// keeping any move that improves the worst disk margin by more than 1e-12.
// Probing a candidate costs one unit of budget; the search stops with
// budget_exhausted when the budget runs out or no candidate improves.
// No backtracking.
SearchReport search_classical(const std::vector<Mobius>& gens, int budget = 200,
                              double tol = 1e-9, Band band = Band::above_unit);

} // namespace schottky
