#include "schottky/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <algorithm>

#include <json.hpp>

#include "schottky/errors.hpp"

namespace schottky {
namespace {

// insertion-ordered so the emitted key order is the order written below
using ojson = nlohmann::ordered_json;

// JSON numbers cannot spell inf/nan (nlohmann would emit null); route every
// double through here so non-finite values round-trip as strings
ojson jnum(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double jget(const ojson& v, const char* what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw parse_error(std::string(what) + ": expected a number or \"inf\"/\"-inf\"/\"nan\"");
}

ojson jcpx(cpx z) { return ojson::array({jnum(z.real()), jnum(z.imag())}); }

cpx getcpx(const ojson& v, const char* what) {
  if (!v.is_array() || v.size() != 2)
    throw parse_error(std::string(what) + ": expected a [re, im] pair");
  return {jget(v[0], what), jget(v[1], what)};
}

ojson jmat(const Mobius& m) { return ojson::array({jcpx(m.a), jcpx(m.b), jcpx(m.c), jcpx(m.d)}); }

Mobius getmat(const ojson& v, const char* what) {
  if (!v.is_array() || v.size() != 4)
    throw parse_error(std::string(what) + ": expected four [re, im] entries (a, b, c, d)");
  return {getcpx(v[0], what), getcpx(v[1], what), getcpx(v[2], what), getcpx(v[3], what)};
}

ojson jdisk(const Disk& d) {
  ojson o = ojson::object();
  if (d.kind == Disk::Kind::halfplane) {
    o["line_normal"] = jcpx(d.normal);
    o["offset"] = jnum(d.offset);
  } else {
    o["center"] = jcpx(d.center);
    o["radius"] = jnum(d.radius);
    o["side"] = d.side == Disk::Side::inside ? "in" : "out";
  }
  return o;
}

Disk getdisk(const ojson& v) {
  if (!v.is_object()) throw parse_error("disk: expected an object");
  if (v.contains("line_normal")) {
    cpx n = getcpx(v.at("line_normal"), "disk normal");
    double off = jget(v.value("offset", ojson(0.0)), "disk offset");
    if (!std::isfinite(n.real()) || !std::isfinite(n.imag()) || !std::isfinite(off) ||
        std::abs(n) == 0.0)
      throw parse_error("disk: half-plane needs a finite nonzero normal and finite offset");
    return Disk::halfplane(n, off);
  }
  if (!v.contains("center") || !v.contains("radius") || !v.contains("side"))
    throw parse_error("disk: expected center/radius/side or line_normal/offset");
  cpx c = getcpx(v.at("center"), "disk center");
  double r = jget(v.at("radius"), "disk radius");
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || !std::isfinite(r) || !(r > 0.0))
    throw parse_error("disk: center must be finite and radius positive");
  const ojson& side = v.at("side");
  if (!side.is_string()) throw parse_error("disk: side must be \"in\" or \"out\"");
  const std::string& s = side.get_ref<const std::string&>();
  if (s == "in") return Disk::circle_in(c, r);
  if (s == "out") return Disk::circle_out(c, r);
  throw parse_error("disk: side must be \"in\" or \"out\"");
}

bool finite(const Mobius& m) {
  auto ok = [](cpx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return ok(m.a) && ok(m.b) && ok(m.c) && ok(m.d);
}

ojson verification_body(const VerificationReport& r, double tol) {
  ojson o = ojson::object();
  o["verified"] = r.verified;
  o["tol"] = jnum(tol);
  o["min_margin"] = jnum(r.min_margin);
  ojson pairs = ojson::array();
  for (const PairMargin& p : r.margins) {
    ojson e = ojson::object();
    e["i"] = p.i;
    e["j"] = p.j;
    e["margin"] = jnum(p.margin);
    pairs.push_back(std::move(e));
  }
  o["pair_margins"] = std::move(pairs);
  ojson res = ojson::array();
  for (double x : r.residuals) res.push_back(jnum(x));
  o["pairing_residuals"] = std::move(res);
  ojson sides = ojson::array();
  for (bool b : r.side_ok) sides.push_back(b);
  o["side_ok"] = std::move(sides);
  o["failures"] = r.failures;
  return o;
}

ojson group_body(const GroupFile& g) {
  ojson o = ojson::object();
  o["format_version"] = 1;
  ojson gens = ojson::array();
  for (const Mobius& m : g.generators) gens.push_back(jmat(m));
  o["generators"] = std::move(gens);
  if (!g.disks.empty()) {
    ojson disks = ojson::array();
    for (const Disk& d : g.disks) disks.push_back(jdisk(d));
    o["disks"] = std::move(disks);
  }
  if (!g.name.empty() || g.has_seed) {
    ojson meta = ojson::object();
    if (!g.name.empty()) meta["name"] = g.name;
    if (g.has_seed) meta["seed"] = g.seed;
    o["metadata"] = std::move(meta);
  }
  return o;
}

ojson diagnostics_body(const MoveDiagnostics& d) {
  ojson o = ojson::object();
  o["min_margin"] = jnum(d.min_margin);
  o["kappa"] = jnum(d.kappa_value);
  o["min_abs_trace"] = jnum(d.min_abs_trace);
  return o;
}

ojson trace_body(const std::vector<MoveRecord>& trace) {
  ojson arr = ojson::array();
  for (const MoveRecord& rec : trace) {
    ojson e = ojson::object();
    e["move"] = move_str(rec.move);
    e["accepted"] = rec.accepted;
    e["before"] = diagnostics_body(rec.before);
    e["after"] = diagnostics_body(rec.after);
    if (!rec.note.empty()) e["note"] = rec.note;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string dump(const ojson& o) { return o.dump(2) + "\n"; }

} // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

GroupFile parse_group(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(e.what());
  }
  if (!j.is_object()) throw parse_error("top level: expected an object");
  const ojson ver = j.value("format_version", ojson());
  if (!ver.is_number_integer() || ver.get<int>() != 1)
    throw parse_error("format_version: expected the integer 1");
  if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty())
    throw parse_error("generators: expected a non-empty array");

  GroupFile g;
  for (const ojson& v : j.at("generators")) {
    Mobius m = getmat(v, "generator");
    if (!finite(m)) throw parse_error("generator: entries must be finite");
    try {
      g.generators.push_back(normalized(m));
    } catch (const singular_matrix_error&) {
      throw parse_error("generator: matrix is singular");
    }
  }
  if (j.contains("disks")) {
    const ojson& dv = j.at("disks");
    if (!dv.is_array()) throw parse_error("disks: expected an array");
    for (const ojson& v : dv) {
      try {
        g.disks.push_back(getdisk(v));
      } catch (const domain_error& e) {
        throw parse_error(e.what());
      }
    }
    if (g.disks.size() != 2 * g.generators.size())
      throw parse_error("disks: expected one source/target pair per generator");
  }
  if (j.contains("metadata")) {
    const ojson& meta = j.at("metadata");
    if (!meta.is_object()) throw parse_error("metadata: expected an object");
    if (meta.contains("name")) {
      if (!meta.at("name").is_string()) throw parse_error("metadata.name: expected a string");
      g.name = meta.at("name").get<std::string>();
    }
    if (meta.contains("seed")) {
      if (!meta.at("seed").is_number_unsigned())
        throw parse_error("metadata.seed: expected an unsigned integer");
      g.has_seed = true;
      g.seed = meta.at("seed").get<std::uint64_t>();
    }
  }
  return g;
}

std::string serialize_group(const GroupFile& g) { return dump(group_body(g)); }

GroupFile from_marking(const Marking& m) {
  GroupFile g;
  g.generators = m.generators;
  g.disks = m.disks;
  return g;
}

Marking to_marking(const GroupFile& g) {
  if (g.disks.empty())
    throw parse_error("group file carries no disks; a marking needs the circle data");
  return {g.generators, g.disks};
}

std::string limit_set_csv(const OrbitSamples& s) {
  std::string out = "re,im,word_len\n";
  for (const OrbitSample& p : s.points) {
    if (p.point.inf) {
      out += "inf,inf,";
    } else {
      out += format_double(p.point.z.real());
      out += ',';
      out += format_double(p.point.z.imag());
      out += ',';
    }
    out += std::to_string(p.length);
    out += '\n';
  }
  return out;
}

std::string limit_set_svg(const OrbitSamples& s, int size) {
  // bounding box over the finite samples; the point at infinity is not drawn
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  for (const OrbitSample& p : s.points) {
    if (p.point.inf) continue;
    double x = p.point.z.real(), y = p.point.z.imag();
    if (!any) {
      xmin = xmax = x;
      ymin = ymax = y;
      any = true;
    } else {
      xmin = std::min(xmin, x); xmax = std::max(xmax, x);
      ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    }
  }
  double w = xmax - xmin, h = ymax - ymin;
  double span = std::max({w, h, 1e-9});
  double pad = 0.05 * span;
  double scale = (size - 1) / (span + 2 * pad);
  // center the shorter axis inside the square canvas, y pointing up
  double x0 = xmin - pad - (span - w) / 2;
  double y0 = ymin - pad - (span - h) / 2;

  char buf[128];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                "viewBox=\"0 0 %d %d\">\n",
                size, size, size, size);
  out += buf;
  std::snprintf(buf, sizeof buf, "<rect width=\"%d\" height=\"%d\" fill=\"white\"/>\n", size, size);
  out += buf;
  for (const OrbitSample& p : s.points) {
    if (p.point.inf) continue;
    double cx = (p.point.z.real() - x0) * scale;
    double cy = size - (p.point.z.imag() - y0) * scale;
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1.5\" fill=\"#1f4e79\" "
                  "fill-opacity=\"0.6\"/>\n",
                  cx, cy);
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

std::string shell_csv(const std::vector<double>& sums) {
  std::string out = "n,shell_sum\n";
  for (std::size_t i = 0; i < sums.size(); i++) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(sums[i]);
    out += '\n';
  }
  return out;
}

std::string verification_json(const VerificationReport& r, double tol) {
  return dump(verification_body(r, tol));
}

std::string dimension_json(const CriticalBound& low, const std::vector<double>& displ,
                           const SeriesReport& series, const HPt& basepoint) {
  ojson o = ojson::object();
  o["D_low"] = jnum(low.value);
  o["rank_too_small"] = low.rank_too_small;
  o["D_series"] = jnum(series.exponent);
  o["shells"] = series.shell_counts;
  ojson diag = ojson::object();
  ojson d = ojson::array();
  for (double x : displ) d.push_back(jnum(x));
  diag["displacements"] = std::move(d);
  diag["basepoint"] = ojson::array({jnum(basepoint.z.real()), jnum(basepoint.z.imag()),
                                    jnum(basepoint.t)});
  ojson roots = ojson::array();
  for (double x : series.last_roots) roots.push_back(jnum(x));
  diag["last_roots"] = std::move(roots);
  diag["spread"] = jnum(series.spread);
  diag["effective_len"] = series.effective_len;
  diag["capped"] = series.capped;
  o["diagnostics"] = std::move(diag);
  return dump(o);
}

std::string certificate_json(const CertificatePair& c, const CertificateCheck& chk) {
  ojson o = ojson::object();
  o["map"] = jmat(c.gamma);
  o["disk_plus"] = jdisk(c.disk_plus);
  o["disk_minus"] = jdisk(c.disk_minus);
  ojson chain = ojson::object();
  chain["phi"] = jmat(c.phi);
  chain["psi"] = jmat(c.psi);
  chain["theta"] = jmat(c.theta);
  o["chain"] = std::move(chain);
  o["radius_sum"] = jnum(c.radius_sum);
  o["radius_closed_form"] = jnum(c.radius_closed_form);
  o["separation_closed_form"] = jnum(c.separation_closed_form);
  o["formula_residual"] = jnum(c.formula_residual);
  o["margin"] = jnum(c.margin);
  o["map_margin"] = jnum(c.map_margin);
  ojson check = ojson::object();
  check["ok"] = chk.ok;
  check["disk_margin"] = jnum(chk.disk_margin);
  check["pairing_residual"] = jnum(chk.pairing_residual);
  check["probe_margin"] = jnum(chk.probe_margin);
  check["radius_residual"] = jnum(chk.radius_residual);
  o["check"] = std::move(check);
  return dump(o);
}

std::string search_json(const SearchReport& r, double tol) {
  ojson o = ojson::object();
  o["status"] = outcome_str(r.outcome);
  o["found"] = r.found;
  o["budget_used"] = r.budget_used;
  o["best_margin"] = jnum(r.best_margin);
  o["conjugation"] = jmat(r.conj);
  ojson words = ojson::array();
  for (const Word& w : r.words) words.push_back(w.str());
  o["generator_words"] = std::move(words);
  ojson moves = ojson::array();
  for (const Move& m : r.moves) moves.push_back(move_str(m));
  o["moves"] = std::move(moves);
  o["trace"] = trace_body(r.trace);
  if (r.found) {
    o["marking"] = group_body(from_marking(r.marking));
    o["verification"] = verification_body(r.verification, tol);
  }
  return dump(o);
}

std::string move_trace_json(const std::vector<MoveRecord>& trace) {
  return dump(trace_body(trace));
}

} // namespace schottky
