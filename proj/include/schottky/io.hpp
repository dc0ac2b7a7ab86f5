#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "schottky/certificate.hpp"
#include "schottky/dimension.hpp"
#include "schottky/marking.hpp"
#include "schottky/mobius.hpp"
#include "schottky/normalization.hpp"

namespace schottky {

// On-disk group description (JSON):
//   {
//     "format_version": 1,
//     "generators": [ [[re,im],[re,im],[re,im],[re,im]], ... ],   // rows a b c d
//     "disks":      [ {"center":[re,im],"radius":r,"side":"in"|"out"}
//                     | {"line_normal":[re,im],"offset":d}, ... ],
//     "metadata":   { "name": "...", "seed": 7 }
//   }
// "disks" and "metadata" are optional; when disks are present there must be
// one source/target pair per generator, in generator order. Non-finite reals
// are written as the strings "inf", "-inf", "nan" (JSON has no spelling for
// them); parsing accepts those strings anywhere a number is expected.
struct GroupFile {
  std::vector<Mobius> generators;  // stored unit-determinant, sign-normalized
  std::vector<Disk> disks;         // empty, or 2 * generators.size()
  std::string name;                // metadata, empty = absent
  bool has_seed = false;
  std::uint64_t seed = 0;
};

GroupFile parse_group(const std::string& text);  // throws parse_error
std::string serialize_group(const GroupFile& g);

GroupFile from_marking(const Marking& m);
Marking to_marking(const GroupFile& g);  // throws parse_error when disks absent

// shortest decimal string that reads back to exactly x; "inf"/"-inf"/"nan"
std::string format_double(double x);

// plain-text artifacts
std::string limit_set_csv(const OrbitSamples& s);                  // re,im,word_len
std::string limit_set_svg(const OrbitSamples& s, int size = 720);  // static scatter
std::string shell_csv(const std::vector<double>& sums);            // n,shell_sum

// JSON report bodies: two-space indent, fixed key order, trailing newline,
// byte-identical across runs for identical inputs
std::string verification_json(const VerificationReport& r, double tol);
std::string dimension_json(const CriticalBound& low, const std::vector<double>& displ,
                           const SeriesReport& series, const HPt& basepoint);
std::string certificate_json(const CertificatePair& c, const CertificateCheck& chk);
std::string search_json(const SearchReport& r, double tol = 1e-9);
std::string move_trace_json(const std::vector<MoveRecord>& trace);

} // namespace schottky
