// command-line front end: verify / dim / certify-pair / search-classical /
// limit-set / gen-random. All output is deterministic for fixed inputs; JSON
// bodies come from the io layer so files and reports share one format.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "schottky/errors.hpp"
#include "schottky/generate.hpp"
#include "schottky/io.hpp"
#include "schottky/normalization.hpp"

using namespace schottky;

namespace {

// exit codes: 0 success (verified / found / ok), 1 the operation ran and
// failed or hit degenerate input, 2 unreadable or malformed input
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot write " + path);
  f << body;
}

struct Output {
  bool json = false;
  bool quiet = false;

  void emit(const std::string& human, const std::string& json_body) const {
    if (quiet) return;
    std::cout << (json ? json_body : human);
  }
  // artifacts (CSV, group files) that are the payload in either mode
  void raw(const std::string& body) const {
    if (!quiet) std::cout << body;
  }
};

Marking load_marking(const std::string& path) { return to_marking(parse_group(read_input(path))); }

int run_verify(const std::string& path, double tol, const Output& out) {
  Marking m = load_marking(path);
  VerificationReport r = verify_marking(m, tol);
  std::string human;
  if (r.verified) {
    human = "verified: min margin " + format_double(r.min_margin) + "\n";
  } else {
    human = "not verified\n";
    for (const std::string& f : r.failures) human += "  " + f + "\n";
  }
  out.emit(human, verification_json(r, tol));
  return r.verified ? kOk : kFailed;
}

int run_dim(const std::string& path, int max_len, std::uint64_t budget, const HPt& base,
            const std::string& shells_out, const Output& out) {
  GroupFile g = parse_group(read_input(path));
  CriticalBound low = critical_lower_bound(g.generators, base);
  SeriesReport series = series_estimate(g.generators, base, max_len, budget);
  std::vector<double> d = displacements(g.generators, base);
  if (!shells_out.empty()) {
    std::vector<double> sums = shell_sums(g.generators, base, max_len, budget, series.exponent);
    write_file(shells_out, shell_csv(sums));
  }
  std::string human = "D_low = " + format_double(low.value) +
                      (low.rank_too_small ? " (rank too small for a positive bound)" : "") +
                      "\nD_series = " + format_double(series.exponent) + " (spread " +
                      format_double(series.spread) + ", shells " +
                      std::to_string(series.effective_len) + (series.capped ? ", capped" : "") +
                      ")\n";
  out.emit(human, dimension_json(low, d, series, base));
  return kOk;
}

int run_certify(const std::string& path, std::size_t index, const Output& out) {
  GroupFile g = parse_group(read_input(path));
  if (index >= g.generators.size()) throw parse_error("--index is out of range");
  CertificatePair cert = disjoint_pair(g.generators[index]);
  CertificateCheck chk = verify_certificate(cert);
  std::string human =
      std::string(chk.ok ? "certificate ok" : "certificate FAILED") + ": separation margin " +
      format_double(cert.margin) + ", radius sum " + format_double(cert.radius_sum) +
      " (closed form residual " + format_double(cert.formula_residual) + ")\n";
  out.emit(human, certificate_json(cert, chk));
  return chk.ok ? kOk : kFailed;
}

int run_search(const std::string& path, int budget, Band band, const std::string& trace_out,
               const Output& out) {
  GroupFile g = parse_group(read_input(path));
  SearchReport r = search_classical(g.generators, budget, 1e-9, band);
  if (!trace_out.empty()) write_file(trace_out, move_trace_json(r.trace));
  std::string human = outcome_str(r.outcome);
  human += ": budget used " + std::to_string(r.budget_used) + ", best margin " +
           format_double(r.best_margin) + "\n";
  for (const Move& m : r.moves) human += "  " + move_str(m) + "\n";
  out.emit(human, search_json(r));
  return r.found ? kOk : kFailed;
}

int run_limit_set(const std::string& path, int max_len, std::uint64_t budget,
                  const std::string& svg_out, const Output& out) {
  GroupFile g = parse_group(read_input(path));
  OrbitSamples s = sample_limit_points(g.generators, max_len, budget);
  if (!svg_out.empty()) write_file(svg_out, limit_set_svg(s));
  out.raw(limit_set_csv(s));
  return kOk;
}

int run_gen_random(int rank, std::uint64_t seed, double radius, const Output& out) {
  Marking m = random_classical_marking(rank, seed, radius);
  GroupFile g = from_marking(m);
  g.name = "random-classical";
  g.has_seed = true;
  g.seed = seed;
  out.raw(serialize_group(g));
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schottky group toolkit: verification, certificates, dimension bounds,\n"
               "classical-marking search, limit sets"};
  app.require_subcommand(1);
  // let the global --json/--quiet flags appear after the subcommand too
  // (subcommands inherit this setting when they are added)
  app.fallthrough();

  Output out;
  app.add_flag("--json", out.json, "machine-readable JSON output");
  app.add_flag("--quiet", out.quiet, "suppress stdout; exit code only");

  std::string path = "-";
  double tol = 1e-9;
  int max_len = 10;
  std::uint64_t budget = 5000000;
  std::vector<double> base_args;
  std::string shells_out, trace_out, svg_out, annulus = "above";
  std::size_t index = 0;
  int search_budget = 200;
  int rank = 2;
  std::uint64_t seed = 1;
  double radius = 0.5;

  CLI::App* verify = app.add_subcommand("verify", "check a marking's circle pairing");
  verify->add_option("path", path, "group file, or - for stdin");
  verify->add_option("--tol", tol, "disjointness/pairing tolerance");

  CLI::App* dim = app.add_subcommand("dim", "dimension lower bound and series estimate");
  dim->add_option("path", path, "group file, or - for stdin");
  dim->add_option("--max-len", max_len, "deepest word shell");
  dim->add_option("--budget", budget, "word enumeration budget");
  dim->add_option("--basepoint", base_args, "orbit basepoint: re im t")->expected(3);
  dim->add_option("--shells", shells_out, "write per-shell sums as CSV");

  CLI::App* cert = app.add_subcommand("certify-pair", "disjoint-disk certificate for one map");
  cert->add_option("path", path, "group file, or - for stdin");
  cert->add_option("--index", index, "generator index");

  CLI::App* search = app.add_subcommand("search-classical", "normalization-move search");
  search->add_option("path", path, "group file, or - for stdin");
  search->add_option("--budget", search_budget, "move evaluation budget");
  search->add_option("--annulus", annulus, "placement band: above or below the unit circle")
      ->check(CLI::IsMember({"above", "below"}));
  search->add_option("--trace-out", trace_out, "write the full move trace as JSON");

  CLI::App* limit = app.add_subcommand("limit-set", "sample attracting fixed points");
  limit->add_option("path", path, "group file, or - for stdin");
  limit->add_option("--max-len", max_len, "deepest word shell");
  limit->add_option("--budget", budget, "word enumeration budget");
  limit->add_option("--svg", svg_out, "also write an SVG scatter");

  CLI::App* gen = app.add_subcommand("gen-random", "emit a random classical marking");
  gen->add_option("--rank", rank, "number of generators")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "deterministic seed");
  gen->add_option("--radius", radius, "circle radius")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;  // help/version exit clean
  }

  try {
    if (*verify) return run_verify(path, tol, out);
    if (*dim) {
      HPt base = kDefaultBasepoint;
      if (!base_args.empty()) base = {cpx(base_args[0], base_args[1]), base_args[2]};
      if (!(base.t > 0.0)) throw parse_error("basepoint height t must be positive");
      return run_dim(path, max_len, budget, base, shells_out, out);
    }
    if (*cert) return run_certify(path, index, out);
    if (*search)
      return run_search(path, search_budget, annulus == "above" ? Band::above_unit : Band::below_unit,
                        trace_out, out);
    if (*limit) return run_limit_set(path, max_len, budget, svg_out, out);
    if (*gen) return run_gen_random(rank, seed, radius, out);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const malformed_marking_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kBadInput;
}
