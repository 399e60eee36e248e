#pragma once

// JSON readers and writers for every file format the tool speaks.
// Rational values travel as strings "p" or "p/q", normalized with q > 0
// and gcd(p, q) = 1; matrix entries are plain integers.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tropmorse/compose.hpp"
#include "tropmorse/curve.hpp"
#include "tropmorse/toric.hpp"
#include "tropmorse/torus.hpp"

namespace tropmorse {

// unreadable files and malformed or mis-shaped JSON
struct IOError : std::runtime_error {
    explicit IOError(const std::string& m) : std::runtime_error(m) {}
};

std::string read_file(const std::string& path);

TropicalCurve parse_curve_json(const std::string& text);
CurveDivisor parse_divisor_json(const std::string& text);
TorusQuadraticDivisor parse_torus_json(const std::string& text);
std::vector<std::vector<long long>> parse_lattice_json(const std::string& text);
LatticePolytope parse_polytope_json(const std::string& text);
IndexedPointSet parse_point_set_json(const std::string& text);

nlohmann::json curve_to_json(const TropicalCurve& c);
nlohmann::json divisor_to_json(const CurveDivisor& d);
nlohmann::json lmd_to_json(const GradedModule& m);
nlohmann::json intersection_point_to_json(const IntersectionPoint& pt);
nlohmann::json point_set_to_json(const IndexedPointSet& s);

} // namespace tropmorse
