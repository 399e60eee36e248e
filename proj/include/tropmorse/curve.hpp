#pragma once

// Tropical curves (metric multigraphs with marked points at infinity),
// divisors given by piecewise linear derivative profiles on edges, and
// the local Morse data attached to where such a divisor meets the zero
// section.  The headline identity checked here is
//
//     euler(LMD) = degree + chi_top
//
// with both sides computed along independent code paths.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropmorse/graded.hpp"
#include "tropmorse/rational.hpp"

namespace tropmorse {

struct TropicalCurve {
    struct Vertex {
        std::string id;
        bool at_infinity = false;
    };
    struct Edge {
        std::string id;
        std::string tail;
        std::string head;
        Rat length; // positive; stored for the metric, the identities never read it
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int vertex_index(const std::string& id) const; // -1 when absent
    int edge_index(const std::string& id) const;
};

// Derivative profile of a local potential along each edge, in the
// tail->head parametrization: breakpoints (position, value) with
// positions strictly increasing from 0 to the edge length, linearly
// interpolated in between.  The outgoing slope at the tail is the value
// at 0; at the head it is minus the value at the length.
struct CurveDivisor {
    using Profile = std::vector<std::pair<Rat, Rat>>;
    std::string curve_label;
    std::vector<std::pair<std::string, Profile>> profiles; // keyed by edge id
    const Profile* profile_for(const std::string& edge_id) const;
};

struct ValidationReport {
    std::vector<std::string> structural;    // broken references, bad shapes
    std::vector<std::string> permissibility; // balance / integrality / plateau failures
    bool ok() const { return structural.empty() && permissibility.empty(); }
    std::string summary() const;
};

struct IntersectionPoint {
    enum class Kind { VertexStar, InfiniteLeaf, EdgeUpCrossing, EdgeDownCrossing, EdgeTouch };
    Kind kind = Kind::VertexStar;

    bool at_vertex = false;
    std::string vertex_id;          // when at_vertex
    std::string edge_id;            // when interior to an edge
    Rat position;                   // position along the edge, in (0, length)

    int p = 0, q = 0;               // vertex stars: ascending / descending branch counts
    bool ascending = false;         // infinite leaves
    long long level = 0;            // integer value of the profile at the point
    std::vector<long long> slopes;  // vertex stars: outgoing integer slopes, sorted

    static const char* kind_name(Kind k);
};

ValidationReport validate(const TropicalCurve& curve, const CurveDivisor& div);

// Points where the divisor meets the zero section: every finite vertex of
// valence != 2, every leaf at infinity, every valence-2 vertex sitting at
// an integer level, and every interior solution of profile(t) in Z.
// Ordered by vertex id, then by (edge id, position).
// Requires validate(...).ok().
std::vector<IntersectionPoint> intersection_points(const TropicalCurve& curve,
                                                   const CurveDivisor& div);

GradedModule local_lmd(const IntersectionPoint& pt);
GradedModule lmd(const TropicalCurve& curve, const CurveDivisor& div);

// Total winding of the derivative section against the zero section,
// computed by telescoping the profile change over every edge.  Loop
// components that never meet the zero section contribute zero.
long long rotation_number(const TropicalCurve& curve, const CurveDivisor& div);

// Degree of the divisor class; equals the rotation number.
long long degree(const TropicalCurve& curve, const CurveDivisor& div);

long long chi_top(const TropicalCurve& curve); // #vertices - #edges

struct RRCheck {
    long long euler_lmd = 0;
    long long degree = 0;
    long long chi_top = 0;
    bool ok = false;
};
RRCheck verify_rr(const TropicalCurve& curve, const CurveDivisor& div);

// A place to cut the curve: either a vertex or an interior edge point.
// Must coincide exactly with an intersection point.
struct CutPoint {
    bool at_vertex = false;
    std::string vertex_id;
    std::string edge_id;
    Rat position;
};

struct SplitResult {
    struct Part {
        TropicalCurve curve;
        CurveDivisor divisor;
        long long euler = 0;
        long long rotation = 0;
    };
    std::vector<Part> parts;
    long long euler_whole = 0;
    long long rotation_whole = 0;
    long long correction = 0; // sum over cut points of (#local branches - 1)
    bool euler_ok = false;    // euler_whole == sum(parts) - correction
    bool rotation_ok = false; // rotation_whole == sum(parts)
    bool ok() const { return euler_ok && rotation_ok; }
};

// Cuts the curve at the given intersection points, duplicating each cut
// point once per local branch, and checks the gluing identity for the
// Euler characteristics together with additivity of the rotation number.
SplitResult split_verify(const TropicalCurve& curve, const CurveDivisor& div,
                         const std::vector<CutPoint>& cuts);

} // namespace tropmorse
