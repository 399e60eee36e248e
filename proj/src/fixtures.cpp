#include "tropmorse/fixtures.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace tropmorse::fixtures {

namespace {

// "elliptic_s12" with prefix "elliptic_s" -> 12; rejects empty, junk, n < 1
std::optional<long long> parse_suffix(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    const std::string tail = name.substr(prefix.size());
    for (char c : tail)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    if (tail.size() > 6) return std::nullopt; // keep windings sane
    long long n = std::atoll(tail.c_str());
    if (n < 1) return std::nullopt;
    return n;
}

CurveFixture elliptic(long long n) {
    // circle of circumference 1: one valence-2 vertex, one loop edge,
    // derivative profile winding from 0 up to n
    CurveFixture f;
    f.curve.vertices = {{"v", false}};
    f.curve.edges = {{"e", "v", "v", Rat(1)}};
    f.divisor.curve_label = "elliptic_s" + std::to_string(n);
    f.divisor.profiles = {{"e", {{Rat(0), Rat(0)}, {Rat(1), Rat(n)}}}};
    return f;
}

CurveFixture tp1(long long n) {
    // segment with both ends at infinity, subdivided at a midpoint vertex;
    // profile rises 0 -> n across the two edges
    CurveFixture f;
    f.curve.vertices = {{"l", true}, {"m", false}, {"r", true}};
    f.curve.edges = {{"a", "l", "m", Rat(1)}, {"b", "m", "r", Rat(1)}};
    f.divisor.curve_label = "tp1_s" + std::to_string(n);
    f.divisor.profiles = {
        {"a", {{Rat(0), Rat(0)}, {Rat(1), Rat(n, 2)}}},
        {"b", {{Rat(0), Rat(n, 2)}, {Rat(1), Rat(n)}}},
    };
    return f;
}

CurveFixture star(int p, int q) {
    // three rays from a finite center out to infinite leaves; the profile
    // leaves level 0 upward on the first p rays and downward on the rest
    CurveFixture f;
    f.curve.vertices = {{"c", false}, {"l1", true}, {"l2", true}, {"l3", true}};
    f.divisor.curve_label = "star_" + std::to_string(p) + "_" + std::to_string(q);
    for (int i = 0; i < p + q; ++i) {
        std::string eid = "e" + std::to_string(i + 1);
        f.curve.edges.push_back({eid, "c", "l" + std::to_string(i + 1), Rat(1)});
        Rat end = i < p ? Rat(1) : Rat(-1);
        f.divisor.profiles.push_back({eid, {{Rat(0), Rat(0)}, {Rat(1), end}}});
    }
    return f;
}

TorusQuadraticDivisor torus_of(int n, std::vector<std::vector<long long>> m) {
    TorusQuadraticDivisor d;
    d.n = n;
    d.matrix = std::move(m);
    d.shift.assign(n, Rat(0));
    return d;
}

} // namespace

std::optional<CurveFixture> curve_fixture(const std::string& name) {
    if (auto n = parse_suffix(name, "elliptic_s")) return elliptic(*n);
    if (auto n = parse_suffix(name, "tp1_s")) return tp1(*n);
    if (name == "star_3_0") return star(3, 0);
    if (name == "star_2_1") return star(2, 1);
    if (name == "star_1_2") return star(1, 2);
    if (name == "star_0_3") return star(0, 3);
    return std::nullopt;
}

std::optional<TorusQuadraticDivisor> torus_fixture(const std::string& name) {
    if (auto n = parse_suffix(name, "torus_s")) return torus_of(1, {{*n}});
    if (name == "torus_diag_2_3") return torus_of(2, {{2, 0}, {0, 3}});
    if (name == "torus_diag_0_1") return torus_of(2, {{0, 0}, {0, 1}});
    if (name == "torus_diag_m1_2") return torus_of(2, {{-1, 0}, {0, 2}});
    if (name == "torus_offdiag") return torus_of(2, {{0, 1}, {1, 0}});
    return std::nullopt;
}

std::optional<std::vector<std::vector<long long>>> lattice_fixture(const std::string& name) {
    if (name == "lattice_identity_2")
        return std::vector<std::vector<long long>>{{1, 0}, {0, 1}};
    if (name == "lattice_diag_2_3") return std::vector<std::vector<long long>>{{2, 0}, {0, 3}};
    if (name == "lattice_shear") return std::vector<std::vector<long long>>{{1, 1}, {0, 1}};
    return std::nullopt;
}

std::optional<LatticePolytope> polytope_fixture(const std::string& name) {
    if (name == "cube_1") return cube(1);
    if (name == "cube_2") return cube(2);
    if (name == "cube_3") return cube(3);
    if (name == "simplex_1") return simplex(1);
    if (name == "simplex_2") return simplex(2);
    if (name == "simplex_3") return simplex(3);
    if (name == "segment_0_5") return segment(0, 5);
    if (name == "two_simplex_2") return dilate(simplex(2), 2);
    if (name == "point_0") {
        LatticePolytope P;
        P.n = 1;
        P.vertices = {{0}};
        P.facets = {{{1}, 0}, {{-1}, 0}};
        return P;
    }
    return std::nullopt;
}

std::string catalog() {
    std::ostringstream out;
    out << "curve fixtures (curve + divisor):\n"
        << "  elliptic_s<n>   circle of circumference 1, profile winding 0 -> n\n"
        << "  tp1_s<n>        segment between two infinite ends, profile 0 -> n\n"
        << "  star_3_0        three rays from a center, all ascending\n"
        << "  star_2_1        two ascending rays, one descending\n"
        << "  star_1_2        one ascending ray, two descending\n"
        << "  star_0_3        three descending rays\n"
        << "torus fixtures:\n"
        << "  torus_s<n>      dimension 1, matrix [n]\n"
        << "  torus_diag_2_3  diag(2,3)\n"
        << "  torus_diag_0_1  diag(0,1), degenerate\n"
        << "  torus_diag_m1_2 diag(-1,2)\n"
        << "  torus_offdiag   [[0,1],[1,0]]\n"
        << "lattice fixtures:\n"
        << "  lattice_identity_2, lattice_diag_2_3, lattice_shear\n"
        << "polytope fixtures:\n"
        << "  cube_1, cube_2, cube_3      unit cubes [0,1]^n\n"
        << "  simplex_1, simplex_2, simplex_3   standard simplices\n"
        << "  segment_0_5                 the interval [0,5]\n"
        << "  two_simplex_2               the doubled 2-simplex\n"
        << "  point_0                     the origin in R^1 (not full dimensional)\n";
    return out.str();
}

LatticePolytope cube(int n) {
    LatticePolytope P;
    P.n = n;
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        std::vector<long long> v(n);
        for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
        P.vertices.push_back(std::move(v));
    }
    for (int i = 0; i < n; ++i) {
        std::vector<long long> lo(n, 0), hi(n, 0);
        lo[i] = -1;
        hi[i] = 1;
        P.facets.push_back({lo, 0});
        P.facets.push_back({hi, 1});
    }
    return P;
}

LatticePolytope simplex(int n) {
    LatticePolytope P;
    P.n = n;
    P.vertices.emplace_back(n, 0);
    for (int i = 0; i < n; ++i) {
        std::vector<long long> v(n, 0);
        v[i] = 1;
        P.vertices.push_back(std::move(v));
    }
    for (int i = 0; i < n; ++i) {
        std::vector<long long> a(n, 0);
        a[i] = -1;
        P.facets.push_back({a, 0});
    }
    P.facets.push_back({std::vector<long long>(n, 1), 1});
    return P;
}

LatticePolytope segment(long long a, long long b) {
    LatticePolytope P;
    P.n = 1;
    P.vertices = {{a}, {b}};
    P.facets = {{{-1}, -a}, {{1}, b}};
    return P;
}

LatticePolytope dilate(LatticePolytope P, long long k) {
    for (auto& v : P.vertices)
        for (auto& x : v) x *= k;
    for (auto& f : P.facets) f.b *= k;
    return P;
}

} // namespace tropmorse::fixtures
