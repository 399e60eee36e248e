#include "tropmorse/torus.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace tropmorse {

void check_torus_divisor(const TorusQuadraticDivisor& d) {
    if (d.n < 1) throw std::invalid_argument("torus dimension must be positive");
    if ((int)d.matrix.size() != d.n) throw std::invalid_argument("matrix row count != n");
    for (auto& row : d.matrix)
        if ((int)row.size() != d.n) throw std::invalid_argument("matrix is not square");
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            if (d.matrix[i][j] != d.matrix[j][i])
                throw std::invalid_argument("matrix is not symmetric");
    if ((int)d.shift.size() != d.n) throw std::invalid_argument("shift length != n");
}

std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m) {
    int rows = int(m.size());
    int cols = rows ? int(m[0].size()) : 0;
    std::vector<long long> factors;
    int r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // pick the smallest nonzero entry as pivot
        int pr = -1, pc = -1;
        for (int i = r0; i < rows; ++i)
            for (int j = c0; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pr < 0 || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        std::swap(m[r0], m[pr]);
        for (int i = r0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);

        bool clean = true;
        for (int i = r0 + 1; i < rows; ++i) {
            long long q = m[i][c0] / m[r0][c0];
            if (q != 0)
                for (int j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
            if (m[i][c0] != 0) clean = false;
        }
        for (int j = c0 + 1; j < cols; ++j) {
            long long q = m[r0][j] / m[r0][c0];
            if (q != 0)
                for (int i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
            if (m[r0][j] != 0) clean = false;
        }
        if (!clean) continue; // remainders shrink the pivot, go again

        // divisibility: the pivot must divide everything left below-right
        long long p = std::llabs(m[r0][c0]);
        bool divides = true;
        for (int i = r0 + 1; i < rows && divides; ++i)
            for (int j = c0 + 1; j < cols && divides; ++j)
                if (m[i][j] % p != 0) {
                    for (int k = c0; k < cols; ++k) m[r0][k] += m[i][k];
                    divides = false;
                }
        if (!divides) continue;

        factors.push_back(p);
        ++r0;
        ++c0;
    }
    while ((int)factors.size() < std::min(rows, cols)) factors.push_back(0);
    return factors;
}

long long det_int(std::vector<std::vector<long long>> m) {
    int n = int(m.size());
    if (n == 0) return 1;
    // Bareiss: every intermediate entry is an exact minor
    int128 prev = 1;
    int sign = 1;
    std::vector<std::vector<int128>> a(n, std::vector<int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int s = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { s = i; break; }
            if (s < 0) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return checked_narrow(sign * a[n - 1][n - 1], "det");
}

std::optional<int> negative_inertia(std::vector<std::vector<Rat>> a) {
    int n = int(a.size());
    std::vector<int> alive(n);
    for (int i = 0; i < n; ++i) alive[i] = i;
    int neg = 0;

    auto swap_rows_cols = [&](int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };

    int k = 0;
    while (k < n) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!a[i][i].is_zero()) { piv = i; break; }
        if (piv >= 0) {
            swap_rows_cols(k, piv);
            Rat d = a[k][k];
            if (d.sign() < 0) ++neg;
            std::vector<Rat> row = a[k]; // pivot row, frozen before elimination
            for (int i = k + 1; i < n; ++i) {
                Rat f = row[i] / d;
                if (f.is_zero()) continue;
                for (int j = k + 1; j < n; ++j) a[i][j] -= f * row[j];
            }
            for (int i = k + 1; i < n; ++i) a[i][k] = a[k][i] = Rat(0);
            ++k;
            continue;
        }
        // all remaining diagonal entries vanish: take a hyperbolic 2x2 block
        int bi = -1, bj = -1;
        for (int i = k; i < n && bi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!a[i][j].is_zero()) { bi = i; bj = j; break; }
        if (bi < 0) return std::nullopt; // trailing zero block, singular
        swap_rows_cols(k, bi);    // bj > bi >= k, so bj lands at >= k+1
        swap_rows_cols(k + 1, bj);
        Rat c = a[k][k + 1];
        // [[0,c],[c,0]] contributes one eigenvalue of each sign
        ++neg;
        std::vector<Rat> rowk = a[k], rowk1 = a[k + 1];
        for (int i = k + 2; i < n; ++i) {
            Rat u = rowk[i], v = rowk1[i];
            if (u.is_zero() && v.is_zero()) continue;
            // subtract the rank-2 interaction through the block inverse
            for (int j = k + 2; j < n; ++j)
                a[i][j] -= (u * rowk1[j] + v * rowk[j]) / c;
        }
        for (int i = k + 2; i < n; ++i)
            a[i][k] = a[i][k + 1] = a[k][i] = a[k + 1][i] = Rat(0);
        k += 2;
    }
    return neg;
}

std::optional<long long> intersection_count(const TorusQuadraticDivisor& d) {
    check_torus_divisor(d);
    auto factors = smith_invariant_factors(d.matrix);
    int128 order = 1;
    for (long long f : factors) {
        if (f == 0) return std::nullopt;
        order *= f;
    }
    return checked_narrow(order, "intersection count");
}

int morse_index(const TorusQuadraticDivisor& d) {
    check_torus_divisor(d);
    std::vector<std::vector<Rat>> a(d.n, std::vector<Rat>(d.n));
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) a[i][j] = Rat(d.matrix[i][j]);
    auto neg = negative_inertia(std::move(a));
    if (!neg) throw std::invalid_argument("morse_index: matrix is degenerate");
    return *neg;
}

TorusLMDReport torus_lmd(const TorusQuadraticDivisor& d) {
    TorusLMDReport rep;
    auto count = intersection_count(d);
    rep.chern_volume = det_int(d.matrix);
    if (!count) {
        // degenerate linear part: a perturbation pulls the section entirely
        // off the zero section, leaving nothing
        rep.degenerate = true;
        rep.lmd = GradedModule::zero();
        rep.euler = 0;
        return rep;
    }
    rep.count = *count;
    rep.index = morse_index(d);
    rep.lmd = GradedModule::free(rep.index, rep.count);
    rep.euler = rep.lmd.euler();
    return rep;
}

HesseCheck verify_hesse_rr(const TorusQuadraticDivisor& d) {
    HesseCheck c;
    c.euler = torus_lmd(d).euler;
    c.det = det_int(d.matrix);
    c.ok = (c.euler == c.det);
    return c;
}

long long bohr_sommerfeld_count(const std::vector<std::vector<long long>>& lattice) {
    if (lattice.empty()) throw std::invalid_argument("empty lattice matrix");
    for (auto& row : lattice)
        if (row.size() != lattice.size())
            throw std::invalid_argument("lattice matrix is not square");
    auto factors = smith_invariant_factors(lattice);
    int128 order = 1;
    for (long long f : factors) {
        if (f == 0)
            throw std::invalid_argument("lattice matrix is singular, count is not finite");
        order *= f;
    }
    return checked_narrow(order, "bohr_sommerfeld_count");
}

} // namespace tropmorse
