#pragma once

// Divisors on integral affine tori R^n / Z^n whose derivative section is
// affine: x -> M x + c with M symmetric integral.  Meetings with the zero
// section form a coset counted by |det M|; each carries the Morse data of
// a quadratic singularity of index n_-(M).

#include <optional>
#include <vector>

#include "tropmorse/graded.hpp"
#include "tropmorse/rational.hpp"

namespace tropmorse {

struct TorusQuadraticDivisor {
    int n = 0;
    std::vector<std::vector<long long>> matrix; // symmetric n x n
    std::vector<Rat> shift;                     // length n
};

// throws std::invalid_argument on shape or symmetry violations
void check_torus_divisor(const TorusQuadraticDivisor& d);

// invariant factors d_1 | d_2 | ... | d_n of an integer matrix, all
// nonnegative, via Smith normal form
std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m);

// determinant by fraction-free Bareiss elimination
long long det_int(std::vector<std::vector<long long>> m);

// number of negative eigenvalues of a symmetric rational matrix with
// nonzero determinant, by congruence (LDL^T with 2x2 pivots for a
// zero diagonal); nullopt when the matrix is singular
std::optional<int> negative_inertia(std::vector<std::vector<Rat>> a);

struct TorusLMDReport {
    bool degenerate = false;
    long long count = 0;      // #(zero section meets section); valid when nondegenerate
    int index = 0;            // Morse index n_-(M)
    GradedModule lmd;
    long long euler = 0;
    long long chern_volume = 0; // det M
};

// order of Z^n / M Z^n via Smith normal form; nullopt when det M = 0
std::optional<long long> intersection_count(const TorusQuadraticDivisor& d);

int morse_index(const TorusQuadraticDivisor& d); // requires det != 0

TorusLMDReport torus_lmd(const TorusQuadraticDivisor& d);

struct HesseCheck {
    long long euler = 0;
    long long det = 0;
    bool ok = false;
};
// euler(LMD) against det M, the two sides through separate eliminations
HesseCheck verify_hesse_rr(const TorusQuadraticDivisor& d);

// Bohr-Sommerfeld point count of the lattice L Z^n inside the torus:
// the index |det L|.  Throws std::invalid_argument when L is singular.
long long bohr_sommerfeld_count(const std::vector<std::vector<long long>>& lattice);

} // namespace tropmorse
