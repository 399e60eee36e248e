#pragma once

// Lattice polytopes with both vertex and inequality descriptions, their
// Ehrhart counting, the associated log-polynomial potential with its
// moment map, and the Morse data of the induced divisor and its negation.

#include <vector>

#include "tropmorse/graded.hpp"
#include "tropmorse/rational.hpp"

namespace tropmorse {

struct LatticePolytope {
    struct Facet {
        std::vector<long long> a; // inner form: a . x <= b
        long long b = 0;
    };
    int n = 0;
    std::vector<std::vector<long long>> vertices;
    std::vector<Facet> facets;
};

// Structural and geometric validation: shapes, vertices inside all
// facets, every facet tight somewhere, and exact agreement of the two
// descriptions (the inequality system is bounded and its basic feasible
// solutions are exactly the listed vertices).  Throws std::invalid_argument.
void check_polytope(const LatticePolytope& P);

bool full_dimensional(const LatticePolytope& P);

// lattice points of k*P (k >= 0), sorted lexicographically
std::vector<std::vector<long long>> lattice_points(const LatticePolytope& P, long long k);
// strict-interior lattice points of k*P; requires full dimension
std::vector<std::vector<long long>> interior_lattice_points(const LatticePolytope& P,
                                                            long long k);

// Ehrhart polynomial coefficients c_0..c_n (c_0 = 1), interpolated through
// the exact counts at k = 0..n
std::vector<Rat> ehrhart(const LatticePolytope& P);
Rat ehrhart_eval(const std::vector<Rat>& coeffs, long long k);

struct ReciprocityCheck {
    bool ok = true;
    std::vector<long long> lhs; // (-1)^n Ehr(-k) for k = 1..kmax
    std::vector<long long> rhs; // interior counts of kP
};
ReciprocityCheck verify_reciprocity(const LatticePolytope& P, long long kmax);

// potential f(x) = log sum over u in P cap Z^n of exp<u, x>, evaluated
// with a max shift so large exponents never overflow
double eval_f(const LatticePolytope& P, const std::vector<double>& x);
std::vector<double> moment_map(const LatticePolytope& P, const std::vector<double>& x);
std::vector<std::vector<double>> hessian(const LatticePolytope& P,
                                         const std::vector<double>& x);

// smallest eigenvalue of a symmetric matrix (cyclic Jacobi)
double symmetric_min_eigenvalue(std::vector<std::vector<double>> a);

struct ToricLMDReport {
    long long lattice_count = 0;
    long long interior_count = 0;
    long long boundary_count = 0;
    GradedModule plus;  // divisor itself: one degree-0 generator per lattice point
    GradedModule minus; // negated divisor: interior points in degree n
    long long euler_plus = 0;
    long long euler_minus = 0;
};
// requires a full-dimensional polytope
ToricLMDReport toric_lmd(const LatticePolytope& P);

// every vertex cone is unimodular (primitive edge directions form a
// determinant +-1 basis); requires full dimension
bool delzant_check(const LatticePolytope& P);

} // namespace tropmorse
