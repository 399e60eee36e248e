#pragma once

// Built-in named examples, addressable from the command line as
// "fixture:<name>".  Curve fixtures carry a divisor along with the curve;
// the parametric families take an integer suffix (elliptic_s3, tp1_s7).

#include <optional>
#include <string>
#include <vector>

#include "tropmorse/curve.hpp"
#include "tropmorse/toric.hpp"
#include "tropmorse/torus.hpp"

namespace tropmorse::fixtures {

struct CurveFixture {
    TropicalCurve curve;
    CurveDivisor divisor;
};

std::optional<CurveFixture> curve_fixture(const std::string& name);
std::optional<TorusQuadraticDivisor> torus_fixture(const std::string& name);
std::optional<std::vector<std::vector<long long>>> lattice_fixture(const std::string& name);
std::optional<LatticePolytope> polytope_fixture(const std::string& name);

// one line per fixture, for --fixtures
std::string catalog();

// polytope builders, also used directly by tests
LatticePolytope cube(int n);
LatticePolytope simplex(int n);
LatticePolytope segment(long long a, long long b);
LatticePolytope dilate(LatticePolytope P, long long k);

} // namespace tropmorse::fixtures
