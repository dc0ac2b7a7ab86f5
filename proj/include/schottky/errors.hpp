#pragma once
#include <stdexcept>
#include <string>

namespace schottky {

// All library failures derive from schottky::error so callers can catch one type.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct singular_matrix_error : error {
  explicit singular_matrix_error(const std::string& m = "matrix is singular (det == 0)") : error(m) {}
};

struct identity_map_error : error {
  explicit identity_map_error(const std::string& m = "map is the identity") : error(m) {}
};

struct not_loxodromic_error : error {
  explicit not_loxodromic_error(const std::string& m = "map is not loxodromic") : error(m) {}
};

// c == 0: the map fixes infinity, so eta/zeta and isometric circles do not exist.
struct infinite_fixed_point_error : error {
  explicit infinite_fixed_point_error(const std::string& m = "map fixes infinity (c == 0)") : error(m) {}
};

struct fixed_point_at_pole_error : error {
  explicit fixed_point_at_pole_error(const std::string& m = "fixed point at 0 or infinity") : error(m) {}
};

struct malformed_marking_error : error {
  explicit malformed_marking_error(const std::string& m = "malformed marking") : error(m) {}
};

struct need_standard_position_error : error {
  explicit need_standard_position_error(const std::string& m = "generator 1 must be diagonal (standard position)") : error(m) {}
};

struct degenerate_modulus_error : error {
  explicit degenerate_modulus_error(const std::string& m = "|lambda| == 1: no expanding direction") : error(m) {}
};

struct degenerate_center_error : error {
  explicit degenerate_center_error(const std::string& m = "zeta or eta is zero or undefined") : error(m) {}
};

struct budget_exceeded_error : error {
  explicit budget_exceeded_error(const std::string& m = "word budget exceeded") : error(m) {}
};

struct degenerate_scales_error : error {
  explicit degenerate_scales_error(const std::string& m = "box-counting scales degenerate") : error(m) {}
};

struct domain_error : error {
  explicit domain_error(const std::string& m = "argument outside the operation's domain") : error(m) {}
};

struct parse_error : error {
  explicit parse_error(const std::string& m = "could not parse input") : error(m) {}
};

} // namespace schottky
