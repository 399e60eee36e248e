#pragma once

// Combining local Morse data across constructions: products (Kunneth),
// covers, and symmetric powers.

#include <cstdint>
#include <string>
#include <vector>

#include "tropmorse/curve.hpp"
#include "tropmorse/graded.hpp"
#include "tropmorse/torus.hpp"

namespace tropmorse {

struct IndexedPointSet {
    struct Point {
        std::string label;
        GradedModule module;
    };
    std::vector<Point> points;

    long long total_euler() const;
    void require_unique_labels() const; // throws std::invalid_argument
};

IndexedPointSet point_set_from_curve(const TropicalCurve& curve, const CurveDivisor& div);
IndexedPointSet point_set_from_torus(const TorusQuadraticDivisor& d);

// product points with tensored modules; labels "(a,b)"
IndexedPointSet kunneth(const IndexedPointSet& a, const IndexedPointSet& b);

struct ProductRRCheck {
    long long euler_product = 0;
    long long factor1 = 0; // degree + chi_top of the first curve
    long long factor2 = 0;
    bool ok = false;
};
ProductRRCheck verify_product_rr(const TropicalCurve& c1, const CurveDivisor& d1,
                                 const TropicalCurve& c2, const CurveDivisor& d2);

enum class CoverMode { Disjoint, Cyclic };

// Disjoint: d labeled copies of the point set.  Cyclic: base must be a
// single circle (connected, every vertex finite of valence 2); the
// profile is pulled back to the connected d-fold cover and recomputed.
IndexedPointSet etale_scale(const IndexedPointSet& points, long long d);
IndexedPointSet cyclic_cover(const TropicalCurve& base, const CurveDivisor& div, long long d);

// builds the degree-d cyclic cover curve and pulled-back divisor
std::pair<TropicalCurve, CurveDivisor> cyclic_cover_data(const TropicalCurve& base,
                                                         const CurveDivisor& div,
                                                         long long d);

struct SymCheck {
    long long chi = 0;
    long long n = 0;
    long long formula = 0; // binomial form
    long long series = 0;  // coefficient of t^n in prod over points (1-t)^(-euler_p)
    bool ok = false;
};
// checks the symmetric-power Euler characteristic of the point set against
// an independent power-series expansion
SymCheck verify_sym(const IndexedPointSet& points, long long n);

} // namespace tropmorse
