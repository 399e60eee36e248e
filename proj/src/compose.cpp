#include "tropmorse/compose.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace tropmorse {

long long IndexedPointSet::total_euler() const {
    long long total = 0;
    for (auto& p : points) total += p.module.euler();
    return total;
}

void IndexedPointSet::require_unique_labels() const {
    std::set<std::string> seen;
    for (auto& p : points)
        if (!seen.insert(p.label).second)
            throw std::invalid_argument("duplicate point label '" + p.label + "'");
}

IndexedPointSet point_set_from_curve(const TropicalCurve& curve, const CurveDivisor& div) {
    IndexedPointSet set;
    for (auto& pt : intersection_points(curve, div)) {
        std::string label = pt.at_vertex ? "v:" + pt.vertex_id
                                         : "e:" + pt.edge_id + "@" + pt.position.str();
        set.points.push_back({std::move(label), local_lmd(pt)});
    }
    set.require_unique_labels();
    return set;
}

IndexedPointSet point_set_from_torus(const TorusQuadraticDivisor& d) {
    auto rep = torus_lmd(d);
    IndexedPointSet set;
    if (rep.degenerate) return set;
    for (long long i = 0; i < rep.count; ++i)
        set.points.push_back({"p" + std::to_string(i), GradedModule::free(rep.index, 1)});
    return set;
}

IndexedPointSet kunneth(const IndexedPointSet& a, const IndexedPointSet& b) {
    a.require_unique_labels();
    b.require_unique_labels();
    IndexedPointSet out;
    for (auto& pa : a.points)
        for (auto& pb : b.points)
            out.points.push_back(
                {"(" + pa.label + "," + pb.label + ")", pa.module.tensor(pb.module)});
    return out;
}

ProductRRCheck verify_product_rr(const TropicalCurve& c1, const CurveDivisor& d1,
                                 const TropicalCurve& c2, const CurveDivisor& d2) {
    ProductRRCheck c;
    c.euler_product = kunneth(point_set_from_curve(c1, d1), point_set_from_curve(c2, d2))
                          .total_euler();
    c.factor1 = degree(c1, d1) + chi_top(c1);
    c.factor2 = degree(c2, d2) + chi_top(c2);
    c.ok = (c.euler_product == c.factor1 * c.factor2);
    return c;
}

IndexedPointSet etale_scale(const IndexedPointSet& points, long long d) {
    if (d < 1) throw std::invalid_argument("cover degree must be positive");
    points.require_unique_labels();
    IndexedPointSet out;
    for (long long i = 0; i < d; ++i)
        for (auto& p : points.points)
            out.points.push_back({"cpy" + std::to_string(i) + "/" + p.label, p.module});
    return out;
}

std::pair<TropicalCurve, CurveDivisor> cyclic_cover_data(const TropicalCurve& base,
                                                         const CurveDivisor& div,
                                                         long long d) {
    if (d < 1) throw std::invalid_argument("cover degree must be positive");
    ValidationReport rep = validate(base, div);
    if (!rep.ok()) throw std::invalid_argument("cyclic cover base: " + rep.summary());
    // the base must be one circle: connected, all vertices finite valence 2
    std::unordered_map<std::string, int> val;
    for (auto& e : base.edges) {
        ++val[e.tail];
        ++val[e.head];
    }
    for (auto& v : base.vertices) {
        if (v.at_infinity || val[v.id] != 2)
            throw std::invalid_argument("cyclic cover base must be a single circle");
    }
    if (base.edges.size() != base.vertices.size() || base.edges.empty())
        throw std::invalid_argument("cyclic cover base must be a single circle");
    // connectivity: walk the cycle
    {
        std::set<std::string> seen{base.edges[0].tail};
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto& e : base.edges) {
                bool t = seen.count(e.tail), h = seen.count(e.head);
                if (t != h) {
                    seen.insert(t ? e.head : e.tail);
                    grew = true;
                }
            }
        }
        if (seen.size() != base.vertices.size())
            throw std::invalid_argument("cyclic cover base must be a single circle");
    }

    // monodromy through the last edge: its copies step to the next sheet
    TropicalCurve cover;
    CurveDivisor cdiv;
    cdiv.curve_label = div.curve_label + "^(" + std::to_string(d) + ")";
    auto sheet_id = [](const std::string& id, long long s) {
        return id + "~" + std::to_string(s);
    };
    for (long long s = 0; s < d; ++s)
        for (auto& v : base.vertices) cover.vertices.push_back({sheet_id(v.id, s), false});
    for (long long s = 0; s < d; ++s) {
        for (size_t ei = 0; ei < base.edges.size(); ++ei) {
            const auto& e = base.edges[ei];
            long long head_sheet = (ei + 1 == base.edges.size()) ? (s + 1) % d : s;
            cover.edges.push_back({sheet_id(e.id, s), sheet_id(e.tail, s),
                                   sheet_id(e.head, head_sheet), e.length});
            cdiv.profiles.push_back({sheet_id(e.id, s), *div.profile_for(e.id)});
        }
    }
    return {cover, cdiv};
}

IndexedPointSet cyclic_cover(const TropicalCurve& base, const CurveDivisor& div, long long d) {
    auto [cover, cdiv] = cyclic_cover_data(base, div, d);
    return point_set_from_curve(cover, cdiv);
}

SymCheck verify_sym(const IndexedPointSet& points, long long n) {
    if (n < 0) throw std::invalid_argument("negative symmetric power");
    SymCheck c;
    c.n = n;
    c.chi = points.total_euler();
    c.formula = sym_euler(c.chi, n);
    // independent series route: [t^n] prod over points of (1-t)^(-euler_p)
    std::vector<long long> series(n + 1, 0);
    series[0] = 1;
    for (auto& p : points.points) {
        long long e = p.module.euler();
        // coefficients of (1-t)^(-e) up to degree n
        std::vector<long long> factor(n + 1, 0);
        for (long long k = 0; k <= n; ++k) factor[k] = sym_euler(e, k);
        std::vector<long long> next(n + 1, 0);
        for (long long i = 0; i <= n; ++i) {
            if (series[i] == 0) continue;
            for (long long j = 0; i + j <= n; ++j)
                next[i + j] = checked_narrow(
                    int128(next[i + j]) + int128(series[i]) * factor[j], "sym series");
        }
        series = std::move(next);
    }
    c.series = series[n];
    c.ok = (c.formula == c.series);
    return c;
}

} // namespace tropmorse
