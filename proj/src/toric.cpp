#include "tropmorse/toric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "tropmorse/torus.hpp"

namespace tropmorse {

namespace {

using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

int rat_rank(RatMat m) {
    int rows = int(m.size());
    if (rows == 0) return 0;
    int cols = int(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c].is_zero()) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// solve a square system; empty result when singular
std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
    int n = int(a.size());
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!a[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Rat f = a[r][c] / a[c][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    RatVec x(n, Rat(0));
    for (int r = n - 1; r >= 0; --r) {
        Rat acc = b[r];
        for (int j = r + 1; j < n; ++j) acc -= a[r][j] * x[j];
        x[r] = acc / a[r][r];
    }
    return x;
}

// one-dimensional null space of a rank n-1 system of rows in R^n
std::optional<RatVec> rat_null_direction(RatMat m, int n) {
    RatMat red = m;
    int rows = int(red.size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < n && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!red[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(red[rank], red[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || red[r][c].is_zero()) continue;
            Rat f = red[r][c] / red[rank][c];
            for (int j = 0; j < n; ++j) red[r][j] -= f * red[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank != n - 1) return std::nullopt;
    // the free column yields the direction
    std::vector<bool> is_piv(n, false);
    for (int c : pivot_col) is_piv[c] = true;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!is_piv[c]) { free_col = c; break; }
    RatVec d(n, Rat(0));
    d[free_col] = Rat(1);
    for (int r = 0; r < rank; ++r) d[pivot_col[r]] = -red[r][free_col] / red[r][pivot_col[r]];
    return d;
}

RatVec to_rat(const std::vector<long long>& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

Rat dot(const std::vector<long long>& a, const RatVec& x) {
    Rat acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += Rat(a[i]) * x[i];
    return acc;
}

long long idot(const std::vector<long long>& a, const std::vector<long long>& x) {
    int128 acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += int128(a[i]) * x[i];
    return checked_narrow(acc, "facet dot");
}

// enumerate subsets of {0..m-1} of the given size
void for_subsets(int m, int size, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == size) { fn(idx); return; }
        for (int i = start; i <= m - (size - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (size == 0) { std::vector<int> empty; fn(empty); return; }
    rec(0, 0);
}

std::vector<std::vector<long long>> all_exponents(const LatticePolytope& P) {
    return lattice_points(P, 1);
}

} // namespace

void check_polytope(const LatticePolytope& P) {
    if (P.n < 1) throw std::invalid_argument("polytope dimension must be positive");
    if (P.vertices.empty()) throw std::invalid_argument("polytope needs vertices");
    if (P.facets.empty()) throw std::invalid_argument("polytope needs facets");
    for (auto& v : P.vertices)
        if ((int)v.size() != P.n) throw std::invalid_argument("vertex has wrong dimension");
    {
        std::set<std::vector<long long>> uniq(P.vertices.begin(), P.vertices.end());
        if (uniq.size() != P.vertices.size())
            throw std::invalid_argument("duplicate vertex in polytope");
    }
    for (auto& f : P.facets) {
        if ((int)f.a.size() != P.n) throw std::invalid_argument("facet normal has wrong dimension");
        bool zero = std::all_of(f.a.begin(), f.a.end(), [](long long c) { return c == 0; });
        if (zero) throw std::invalid_argument("facet with zero normal");
    }

    // every vertex satisfies every inequality; every facet is tight somewhere
    for (auto& f : P.facets) {
        bool tight = false;
        for (auto& v : P.vertices) {
            long long d = idot(f.a, v);
            if (d > f.b)
                throw std::invalid_argument("vertex violates a facet inequality");
            if (d == f.b) tight = true;
        }
        if (!tight) throw std::invalid_argument("facet not tight at any vertex");
    }

    int m = int(P.facets.size());

    // boundedness of the inequality system: no lineality, no recession ray
    {
        RatMat A(m, RatVec(P.n));
        for (int i = 0; i < m; ++i) A[i] = to_rat(P.facets[i].a);
        if (rat_rank(A) < P.n)
            throw std::invalid_argument("inequality system is unbounded (lineality)");
        bool unbounded = false;
        for_subsets(m, P.n - 1, [&](const std::vector<int>& S) {
            if (unbounded) return;
            RatMat rows;
            for (int i : S) rows.push_back(to_rat(P.facets[i].a));
            auto d = rat_null_direction(rows, P.n);
            if (!d) return;
            auto recedes = [&](int sgn) {
                for (auto& f : P.facets) {
                    Rat s(0);
                    for (int j = 0; j < P.n; ++j) s += Rat(sgn) * Rat(f.a[j]) * (*d)[j];
                    if (s.sign() > 0) return false;
                }
                return true;
            };
            if (recedes(1) || recedes(-1)) unbounded = true;
        });
        if (unbounded)
            throw std::invalid_argument("inequality system is unbounded (recession ray)");
    }

    // basic feasible solutions of the inequality system must be exactly the
    // listed vertices; with boundedness this pins conv(vertices) == H-rep
    std::set<std::vector<Rat>> bfs;
    for_subsets(m, P.n, [&](const std::vector<int>& S) {
        RatMat A;
        RatVec b;
        for (int i : S) {
            A.push_back(to_rat(P.facets[i].a));
            b.push_back(Rat(P.facets[i].b));
        }
        auto x = rat_solve(A, b);
        if (!x) return;
        for (auto& f : P.facets)
            if (dot(f.a, *x) > Rat(f.b)) return;
        bfs.insert(*x);
    });
    std::set<std::vector<Rat>> vset;
    for (auto& v : P.vertices) vset.insert(to_rat(v));
    if (bfs != vset)
        throw std::invalid_argument(
            "vertex list and inequality system describe different polytopes");
}

bool full_dimensional(const LatticePolytope& P) {
    RatMat diffs;
    for (size_t i = 1; i < P.vertices.size(); ++i) {
        RatVec d(P.n);
        for (int j = 0; j < P.n; ++j)
            d[j] = Rat(P.vertices[i][j] - P.vertices[0][j]);
        diffs.push_back(std::move(d));
    }
    return rat_rank(diffs) == P.n;
}

namespace {

template <typename Pred>
std::vector<std::vector<long long>> box_scan(const LatticePolytope& P, long long k,
                                             Pred keep) {
    std::vector<long long> lo(P.n, 0), hi(P.n, 0);
    for (int j = 0; j < P.n; ++j) {
        long long mn = P.vertices[0][j], mx = P.vertices[0][j];
        for (auto& v : P.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = mn * k;
        hi[j] = mx * k;
        if (lo[j] > hi[j]) std::swap(lo[j], hi[j]);
    }
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(P.n);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == P.n) {
            if (keep(x)) out.push_back(x);
            return;
        }
        for (long long c = lo[depth]; c <= hi[depth]; ++c) {
            x[depth] = c;
            rec(depth + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::vector<long long>> lattice_points(const LatticePolytope& P, long long k) {
    if (k < 0) throw std::invalid_argument("negative dilation");
    if (k == 0) return {std::vector<long long>(P.n, 0)};
    return box_scan(P, k, [&](const std::vector<long long>& x) {
        for (auto& f : P.facets)
            if (idot(f.a, x) > f.b * k) return false;
        return true;
    });
}

std::vector<std::vector<long long>> interior_lattice_points(const LatticePolytope& P,
                                                            long long k) {
    if (k < 1) throw std::invalid_argument("interior needs a positive dilation");
    if (!full_dimensional(P))
        throw std::invalid_argument(
            "interior lattice points are only defined for full-dimensional polytopes");
    return box_scan(P, k, [&](const std::vector<long long>& x) {
        for (auto& f : P.facets)
            if (idot(f.a, x) >= f.b * k) return false;
        return true;
    });
}

std::vector<Rat> ehrhart(const LatticePolytope& P) {
    int n = P.n;
    // Lagrange interpolation through (k, count(k)) for k = 0..n
    std::vector<long long> counts(n + 1);
    for (long long k = 0; k <= n; ++k) counts[k] = (long long)lattice_points(P, k).size();
    std::vector<Rat> coeffs(n + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        // basis polynomial prod_{j != i} (t - j)/(i - j), accumulated as
        // coefficient vectors
        std::vector<Rat> poly{Rat(1)};
        Rat denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(poly.size() + 1, Rat(0));
            for (size_t d = 0; d < poly.size(); ++d) {
                next[d + 1] += poly[d];
                next[d] -= poly[d] * Rat(j);
            }
            poly = std::move(next);
            denom *= Rat(i - j);
        }
        for (size_t d = 0; d < poly.size(); ++d)
            coeffs[d] += poly[d] * Rat(counts[i]) / denom;
    }
    if (!(coeffs[0] == Rat(1)))
        throw std::logic_error("ehrhart constant term is not 1");
    return coeffs;
}

Rat ehrhart_eval(const std::vector<Rat>& coeffs, long long k) {
    Rat acc(0), p(1);
    for (auto& c : coeffs) {
        acc += c * p;
        p *= Rat(k);
    }
    return acc;
}

ReciprocityCheck verify_reciprocity(const LatticePolytope& P, long long kmax) {
    ReciprocityCheck c;
    auto coeffs = ehrhart(P);
    int sgn = P.n % 2 == 0 ? 1 : -1;
    for (long long k = 1; k <= kmax; ++k) {
        Rat v = ehrhart_eval(coeffs, -k) * Rat(sgn);
        if (!v.is_integer()) {
            c.ok = false;
            c.lhs.push_back(0);
        } else {
            c.lhs.push_back(v.num());
        }
        c.rhs.push_back((long long)interior_lattice_points(P, k).size());
        if (c.lhs.back() != c.rhs.back()) c.ok = false;
    }
    return c;
}

double eval_f(const LatticePolytope& P, const std::vector<double>& x) {
    auto exps = all_exponents(P);
    double mx = -HUGE_VAL;
    std::vector<double> e(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) {
        double s = 0;
        for (int j = 0; j < P.n; ++j) s += double(exps[i][j]) * x[j];
        e[i] = s;
        mx = std::max(mx, s);
    }
    double acc = 0;
    for (double s : e) acc += std::exp(s - mx);
    return mx + std::log(acc);
}

std::vector<double> moment_map(const LatticePolytope& P, const std::vector<double>& x) {
    auto exps = all_exponents(P);
    double mx = -HUGE_VAL;
    std::vector<double> e(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) {
        double s = 0;
        for (int j = 0; j < P.n; ++j) s += double(exps[i][j]) * x[j];
        e[i] = s;
        mx = std::max(mx, s);
    }
    double z = 0;
    for (double& s : e) {
        s = std::exp(s - mx);
        z += s;
    }
    std::vector<double> mu(P.n, 0.0);
    for (size_t i = 0; i < exps.size(); ++i)
        for (int j = 0; j < P.n; ++j) mu[j] += (e[i] / z) * double(exps[i][j]);
    return mu;
}

std::vector<std::vector<double>> hessian(const LatticePolytope& P,
                                         const std::vector<double>& x) {
    auto exps = all_exponents(P);
    auto mu = moment_map(P, x);
    double mx = -HUGE_VAL;
    std::vector<double> e(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) {
        double s = 0;
        for (int j = 0; j < P.n; ++j) s += double(exps[i][j]) * x[j];
        e[i] = s;
        mx = std::max(mx, s);
    }
    double z = 0;
    for (double& s : e) {
        s = std::exp(s - mx);
        z += s;
    }
    std::vector<std::vector<double>> h(P.n, std::vector<double>(P.n, 0.0));
    for (size_t i = 0; i < exps.size(); ++i) {
        double w = e[i] / z;
        for (int r = 0; r < P.n; ++r)
            for (int c = 0; c < P.n; ++c)
                h[r][c] += w * (double(exps[i][r]) - mu[r]) * (double(exps[i][c]) - mu[c]);
    }
    return h;
}

double symmetric_min_eigenvalue(std::vector<std::vector<double>> a) {
    int n = int(a.size());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1.0 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    double mn = a[0][0];
    for (int i = 1; i < n; ++i) mn = std::min(mn, a[i][i]);
    return mn;
}

ToricLMDReport toric_lmd(const LatticePolytope& P) {
    if (!full_dimensional(P))
        throw std::invalid_argument("morse data needs a full-dimensional polytope");
    ToricLMDReport rep;
    rep.lattice_count = (long long)lattice_points(P, 1).size();
    rep.interior_count = (long long)interior_lattice_points(P, 1).size();
    rep.boundary_count = rep.lattice_count - rep.interior_count;
    // the potential ascends away from every lattice point of P, so each
    // contributes a degree-0 generator; for the negation only interior
    // points survive, in top degree
    rep.plus = GradedModule::free(0, rep.lattice_count);
    rep.minus = GradedModule::free(P.n, rep.interior_count);
    rep.euler_plus = rep.plus.euler();
    rep.euler_minus = rep.minus.euler();
    return rep;
}

bool delzant_check(const LatticePolytope& P) {
    if (!full_dimensional(P))
        throw std::invalid_argument("delzant check needs a full-dimensional polytope");
    auto tight_set = [&](const std::vector<long long>& v) {
        std::vector<int> t;
        for (size_t i = 0; i < P.facets.size(); ++i)
            if (idot(P.facets[i].a, v) == P.facets[i].b) t.push_back(int(i));
        return t;
    };
    std::vector<std::vector<int>> tights;
    for (auto& v : P.vertices) tights.push_back(tight_set(v));

    for (size_t vi = 0; vi < P.vertices.size(); ++vi) {
        std::vector<std::vector<long long>> dirs;
        for (size_t wi = 0; wi < P.vertices.size(); ++wi) {
            if (wi == vi) continue;
            // [v, w] is an edge iff their common tight facets cut a line
            RatMat common;
            for (int fi : tights[vi])
                if (std::find(tights[wi].begin(), tights[wi].end(), fi) != tights[wi].end())
                    common.push_back(to_rat(P.facets[fi].a));
            if (common.empty() ? P.n != 1 : rat_rank(common) != P.n - 1) continue;
            std::vector<long long> d(P.n);
            for (int j = 0; j < P.n; ++j) d[j] = P.vertices[wi][j] - P.vertices[vi][j];
            long long g = 0;
            for (long long c : d) g = std::gcd(g, c < 0 ? -c : c);
            for (long long& c : d) c /= g;
            dirs.push_back(std::move(d));
        }
        if ((int)dirs.size() != P.n) return false;
        long long det = det_int(dirs);
        if (det != 1 && det != -1) return false;
    }
    return true;
}

} // namespace tropmorse
