#include "tropmorse/curve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace tropmorse {

namespace {

struct EndRef {
    int edge = -1;
    bool at_tail = true;
};

// resolved incidence view of a structurally sound curve + divisor
struct Resolved {
    const TropicalCurve* curve = nullptr;
    std::vector<const CurveDivisor::Profile*> profile; // by edge index
    std::vector<std::vector<EndRef>> ends;             // by vertex index
    std::unordered_map<std::string, int> vidx, eidx;

    Rat end_value(const EndRef& r) const {
        const auto& bp = *profile[r.edge];
        return r.at_tail ? bp.front().second : bp.back().second;
    }
    Rat outgoing(const EndRef& r) const {
        Rat v = end_value(r);
        return r.at_tail ? v : -v;
    }
    // sign of the profile slope on the segment adjacent to the end; this is
    // also the sign of the local potential's derivative pointing away from
    // the vertex, in both orientations
    int sigma(const EndRef& r) const {
        const auto& bp = *profile[r.edge];
        if (r.at_tail) return (bp[1].second - bp[0].second).sign();
        size_t n = bp.size();
        return (bp[n - 1].second - bp[n - 2].second).sign();
    }
};

int sign(const Rat& r) { return r.sign(); }

Rat interpolate(const CurveDivisor::Profile& bp, const Rat& pos) {
    if (pos <= bp.front().first) return bp.front().second;
    for (size_t i = 0; i + 1 < bp.size(); ++i) {
        if (pos <= bp[i + 1].first) {
            const Rat& t0 = bp[i].first;
            const Rat& t1 = bp[i + 1].first;
            const Rat& y0 = bp[i].second;
            const Rat& y1 = bp[i + 1].second;
            if (t1 == t0) return y1;
            return y0 + (y1 - y0) * (pos - t0) / (t1 - t0);
        }
    }
    return bp.back().second;
}

Resolved resolve(const TropicalCurve& curve, const CurveDivisor& div) {
    Resolved r;
    r.curve = &curve;
    for (size_t i = 0; i < curve.vertices.size(); ++i)
        r.vidx[curve.vertices[i].id] = int(i);
    for (size_t i = 0; i < curve.edges.size(); ++i)
        r.eidx[curve.edges[i].id] = int(i);
    r.profile.assign(curve.edges.size(), nullptr);
    for (auto& [eid, prof] : div.profiles) {
        auto it = r.eidx.find(eid);
        if (it != r.eidx.end()) r.profile[it->second] = &prof;
    }
    r.ends.assign(curve.vertices.size(), {});
    for (size_t e = 0; e < curve.edges.size(); ++e) {
        r.ends[r.vidx.at(curve.edges[e].tail)].push_back({int(e), true});
        r.ends[r.vidx.at(curve.edges[e].head)].push_back({int(e), false});
    }
    return r;
}

} // namespace

int TropicalCurve::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return int(i);
    return -1;
}

int TropicalCurve::edge_index(const std::string& id) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return int(i);
    return -1;
}

const CurveDivisor::Profile* CurveDivisor::profile_for(const std::string& edge_id) const {
    for (auto& [eid, prof] : profiles)
        if (eid == edge_id) return &prof;
    return nullptr;
}

std::string ValidationReport::summary() const {
    std::string s;
    for (auto& m : structural) s += "structural: " + m + "\n";
    for (auto& m : permissibility) s += "permissibility: " + m + "\n";
    if (s.empty()) s = "ok";
    return s;
}

const char* IntersectionPoint::kind_name(Kind k) {
    switch (k) {
        case Kind::VertexStar: return "vertex_star";
        case Kind::InfiniteLeaf: return "infinite_leaf";
        case Kind::EdgeUpCrossing: return "edge_up_crossing";
        case Kind::EdgeDownCrossing: return "edge_down_crossing";
        case Kind::EdgeTouch: return "edge_touch";
    }
    return "?";
}

ValidationReport validate(const TropicalCurve& curve, const CurveDivisor& div) {
    ValidationReport rep;
    auto structural = [&rep](std::string m) { rep.structural.push_back(std::move(m)); };
    auto violation = [&rep](std::string m) { rep.permissibility.push_back(std::move(m)); };

    std::unordered_map<std::string, int> vidx;
    for (auto& v : curve.vertices) {
        if (!vidx.emplace(v.id, 1).second) structural("duplicate vertex id '" + v.id + "'");
    }
    std::unordered_map<std::string, int> eidx;
    std::unordered_map<std::string, int> valence;
    for (auto& e : curve.edges) {
        if (!eidx.emplace(e.id, 1).second) structural("duplicate edge id '" + e.id + "'");
        bool refs_ok = true;
        for (auto* end : {&e.tail, &e.head}) {
            if (!vidx.count(*end)) {
                structural("edge '" + e.id + "' references unknown vertex '" + *end + "'");
                refs_ok = false;
            }
        }
        if (refs_ok) {
            ++valence[e.tail];
            ++valence[e.head];
            if (curve.vertices[curve.vertex_index(e.tail)].at_infinity &&
                curve.vertices[curve.vertex_index(e.head)].at_infinity)
                structural("edge '" + e.id + "' joins two vertices at infinity");
        }
        if (e.length.sign() <= 0)
            structural("edge '" + e.id + "' has nonpositive length " + e.length.str());
    }
    for (auto& v : curve.vertices) {
        if (v.at_infinity && valence[v.id] != 1)
            structural("vertex '" + v.id + "' at infinity has valence " +
                       std::to_string(valence[v.id]) + ", expected 1");
    }

    std::set<std::string> seen_profiles;
    for (auto& [eid, prof] : div.profiles) {
        if (!seen_profiles.insert(eid).second) {
            structural("duplicate profile for edge '" + eid + "'");
            continue;
        }
        if (!eidx.count(eid)) {
            structural("profile for unknown edge '" + eid + "'");
            continue;
        }
        const auto& edge = curve.edges[curve.edge_index(eid)];
        if (prof.size() < 2) {
            structural("profile on edge '" + eid + "' needs at least 2 breakpoints");
            continue;
        }
        bool increasing = true;
        for (size_t i = 0; i + 1 < prof.size(); ++i)
            if (!(prof[i].first < prof[i + 1].first)) increasing = false;
        if (!increasing)
            structural("profile on edge '" + eid + "': positions must increase strictly");
        if (!(prof.front().first == Rat(0)))
            structural("profile on edge '" + eid + "': first breakpoint must sit at position 0");
        if (!(prof.back().first == edge.length))
            structural("profile on edge '" + eid + "': last breakpoint must sit at the edge length " +
                       edge.length.str());
    }
    for (auto& e : curve.edges)
        if (!seen_profiles.count(e.id)) structural("no profile for edge '" + e.id + "'");

    if (!rep.structural.empty()) return rep;

    Resolved rv = resolve(curve, div);

    // no derivative plateau at an integer value
    for (size_t e = 0; e < curve.edges.size(); ++e) {
        const auto& bp = *rv.profile[e];
        for (size_t i = 0; i + 1 < bp.size(); ++i) {
            if (bp[i].second == bp[i + 1].second && bp[i].second.is_integer())
                violation("edge '" + curve.edges[e].id + "': derivative constant at integer " +
                          bp[i].second.str() + " on [" + bp[i].first.str() + ", " +
                          bp[i + 1].first.str() + "]");
        }
    }

    for (size_t v = 0; v < curve.vertices.size(); ++v) {
        const auto& vert = curve.vertices[v];
        const auto& ends = rv.ends[v];
        if (vert.at_infinity) {
            // in the leaf's own chart the derivative decays to zero; in the
            // edge chart that leaves an integer reattachment value
            Rat val = rv.end_value(ends[0]);
            if (!val.is_integer())
                violation("leaf '" + vert.id + "': profile value " + val.str() +
                          " at the infinite end is not an integer");
            continue;
        }
        size_t k = ends.size();
        if (k == 2) {
            Rat s = rv.outgoing(ends[0]) + rv.outgoing(ends[1]);
            if (!s.is_integer())
                violation("vertex '" + vert.id + "': derivative jump " + s.str() +
                          " across the vertex is not an integer");
            continue;
        }
        // valence != 2: the local differential is a lattice covector, so
        // every outgoing slope is an integer
        Rat sum(0);
        bool all_int = true;
        for (auto& r : ends) {
            Rat o = rv.outgoing(r);
            sum += o;
            if (!o.is_integer()) {
                all_int = false;
                violation("vertex '" + vert.id + "': outgoing slope " + o.str() + " along edge '" +
                          curve.edges[r.edge].id + "' is not an integer");
            }
        }
        // a single covector on the k-ray star has outgoing slopes summing to
        // zero; valence 1 carries no such relation (one ray, free slope)
        if (k >= 3 && all_int && !(sum == Rat(0)))
            violation("vertex '" + vert.id + "': outgoing slopes sum to " + sum.str() +
                      ", expected 0");
    }
    return rep;
}

std::vector<IntersectionPoint> intersection_points(const TropicalCurve& curve,
                                                   const CurveDivisor& div) {
    ValidationReport rep = validate(curve, div);
    if (!rep.ok()) throw std::invalid_argument("intersection_points: " + rep.summary());
    Resolved rv = resolve(curve, div);

    std::vector<IntersectionPoint> out;

    for (size_t v = 0; v < curve.vertices.size(); ++v) {
        const auto& vert = curve.vertices[v];
        const auto& ends = rv.ends[v];
        if (vert.at_infinity) {
            IntersectionPoint pt;
            pt.kind = IntersectionPoint::Kind::InfiniteLeaf;
            pt.at_vertex = true;
            pt.vertex_id = vert.id;
            pt.ascending = rv.sigma(ends[0]) > 0;
            pt.level = rv.end_value(ends[0]).num();
            out.push_back(std::move(pt));
            continue;
        }
        if (ends.size() == 2) {
            // lineality direction: the vertex meets the zero section only
            // when the derivative sits at an integer there
            if (!rv.end_value(ends[0]).is_integer() || !rv.end_value(ends[1]).is_integer())
                continue;
        }
        IntersectionPoint pt;
        pt.kind = IntersectionPoint::Kind::VertexStar;
        pt.at_vertex = true;
        pt.vertex_id = vert.id;
        for (auto& r : ends) {
            int s = rv.sigma(r);
            if (s > 0) ++pt.p;
            else if (s < 0) ++pt.q;
            else throw std::logic_error("flat branch at intersection vertex '" + vert.id + "'");
            pt.slopes.push_back(rv.outgoing(r).num());
        }
        std::sort(pt.slopes.begin(), pt.slopes.end());
        out.push_back(std::move(pt));
    }

    for (size_t e = 0; e < curve.edges.size(); ++e) {
        const auto& bp = *rv.profile[e];
        const Rat L = curve.edges[e].length;
        std::vector<IntersectionPoint> events;
        for (size_t i = 0; i + 1 < bp.size(); ++i) {
            const Rat &t0 = bp[i].first, &t1 = bp[i + 1].first;
            const Rat &y0 = bp[i].second, &y1 = bp[i + 1].second;
            if (y0 == y1) continue; // constant at a non-integer, no meetings
            int s = sign(y1 - y0);
            long long lo = (y0 < y1 ? y0 : y1).ceil();
            long long hi = (y0 < y1 ? y1 : y0).floor();
            for (long long m = lo; m <= hi; ++m) {
                Rat pos = t0 + (Rat(m) - y0) * (t1 - t0) / (y1 - y0);
                if (pos == t0) continue; // recorded by the previous segment, or a vertex
                int sl = s, sr = s;
                if (pos == t1) {
                    if (i + 2 >= bp.size()) continue; // edge end, the vertex owns it
                    sr = sign(bp[i + 2].second - bp[i + 1].second);
                }
                IntersectionPoint pt;
                pt.at_vertex = false;
                pt.edge_id = curve.edges[e].id;
                pt.position = pos;
                pt.level = m;
                if (sl > 0 && sr > 0) pt.kind = IntersectionPoint::Kind::EdgeUpCrossing;
                else if (sl < 0 && sr < 0) pt.kind = IntersectionPoint::Kind::EdgeDownCrossing;
                else pt.kind = IntersectionPoint::Kind::EdgeTouch;
                events.push_back(std::move(pt));
            }
        }
        (void)L;
        std::sort(events.begin(), events.end(),
                  [](const IntersectionPoint& a, const IntersectionPoint& b) {
                      return a.position < b.position;
                  });
        for (auto& ev : events) out.push_back(std::move(ev));
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const IntersectionPoint& a, const IntersectionPoint& b) {
                         if (a.at_vertex != b.at_vertex) return a.at_vertex;
                         if (a.at_vertex) return a.vertex_id < b.vertex_id;
                         if (a.edge_id != b.edge_id) return a.edge_id < b.edge_id;
                         return a.position < b.position;
                     });
    return out;
}

GradedModule local_lmd(const IntersectionPoint& pt) {
    using K = IntersectionPoint::Kind;
    switch (pt.kind) {
        case K::VertexStar:
            // descending branches q: the sublevel set is q contractible rays,
            // so the data is reduced cohomology shifted up by one
            return pt.q == 0 ? GradedModule::free(0, 1) : GradedModule::free(1, pt.q - 1);
        case K::InfiniteLeaf:
            return pt.ascending ? GradedModule::free(0, 1) : GradedModule::zero();
        case K::EdgeUpCrossing:
            return GradedModule::free(0, 1);
        case K::EdgeDownCrossing:
            return GradedModule::free(1, 1);
        case K::EdgeTouch:
            return GradedModule::zero();
    }
    return GradedModule::zero();
}

GradedModule lmd(const TropicalCurve& curve, const CurveDivisor& div) {
    GradedModule total;
    for (auto& pt : intersection_points(curve, div)) total = total.direct_sum(local_lmd(pt));
    return total;
}

long long rotation_number(const TropicalCurve& curve, const CurveDivisor& div) {
    ValidationReport rep = validate(curve, div);
    if (!rep.ok()) throw std::invalid_argument("rotation_number: " + rep.summary());
    // lifted winding telescopes over edges; components avoiding the zero
    // section are pinned inside one unit band and cancel exactly
    Rat total(0);
    for (auto& [eid, prof] : div.profiles) {
        (void)eid;
        total += prof.back().second - prof.front().second;
    }
    if (!total.is_integer())
        throw std::logic_error("rotation came out fractional: " + total.str());
    return total.num();
}

long long degree(const TropicalCurve& curve, const CurveDivisor& div) {
    return rotation_number(curve, div);
}

long long chi_top(const TropicalCurve& curve) {
    return (long long)curve.vertices.size() - (long long)curve.edges.size();
}

RRCheck verify_rr(const TropicalCurve& curve, const CurveDivisor& div) {
    RRCheck c;
    c.euler_lmd = lmd(curve, div).euler();
    c.degree = degree(curve, div);
    c.chi_top = chi_top(curve);
    c.ok = (c.euler_lmd == c.degree + c.chi_top);
    return c;
}

namespace {

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { for (int i = 0; i < n; ++i) parent[i] = i; }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

SplitResult split_verify(const TropicalCurve& curve, const CurveDivisor& div,
                         const std::vector<CutPoint>& cuts) {
    auto pts = intersection_points(curve, div);
    Resolved rv = resolve(curve, div);

    std::set<std::string> cut_vertices;
    std::map<std::string, std::vector<Rat>> cut_positions; // by edge id
    for (auto& c : cuts) {
        bool found = false;
        for (auto& pt : pts) {
            if (c.at_vertex && pt.at_vertex && pt.vertex_id == c.vertex_id) found = true;
            if (!c.at_vertex && !pt.at_vertex && pt.edge_id == c.edge_id &&
                pt.position == c.position)
                found = true;
        }
        if (!found)
            throw std::invalid_argument(
                "cut point is not an intersection point: " +
                (c.at_vertex ? "vertex '" + c.vertex_id + "'"
                             : "edge '" + c.edge_id + "' at " + c.position.str()));
        if (c.at_vertex) cut_vertices.insert(c.vertex_id);
        else cut_positions[c.edge_id].push_back(c.position);
    }
    for (auto& [eid, ps] : cut_positions) {
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    }

    // nodes: one per uncut vertex, one fresh node per branch at a cut
    struct Node {
        bool fresh;
        std::string id;
        bool at_infinity;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, int> vertex_node; // uncut original vertices
    for (auto& v : curve.vertices) {
        if (cut_vertices.count(v.id)) continue;
        vertex_node[v.id] = int(nodes.size());
        nodes.push_back({false, v.id, v.at_infinity});
    }
    auto fresh_node = [&nodes](const std::string& id) {
        nodes.push_back({true, id, false});
        return int(nodes.size()) - 1;
    };

    struct Piece {
        std::string id;
        int from, to;
        Rat length;
        CurveDivisor::Profile prof;
    };
    std::vector<Piece> pieces;

    for (size_t e = 0; e < curve.edges.size(); ++e) {
        const auto& edge = curve.edges[e];
        const auto& bp = *rv.profile[e];
        std::vector<Rat> bounds{Rat(0)};
        auto itc = cut_positions.find(edge.id);
        if (itc != cut_positions.end())
            bounds.insert(bounds.end(), itc->second.begin(), itc->second.end());
        bounds.push_back(edge.length);

        int npieces = int(bounds.size()) - 1;
        for (int i = 0; i < npieces; ++i) {
            const Rat &a = bounds[i], &b = bounds[i + 1];
            Piece pc;
            pc.id = npieces == 1 ? edge.id : edge.id + "#" + std::to_string(i);
            pc.length = b - a;
            // endpoints of the piece
            if (i == 0) {
                auto it = vertex_node.find(edge.tail);
                pc.from = it != vertex_node.end()
                              ? it->second
                              : fresh_node("cut:" + edge.tail + ":" + edge.id + ":t");
            } else {
                pc.from = fresh_node("cut:" + edge.id + "@" + a.str() + ":r");
            }
            if (i == npieces - 1) {
                auto it = vertex_node.find(edge.head);
                pc.to = it != vertex_node.end()
                            ? it->second
                            : fresh_node("cut:" + edge.head + ":" + edge.id + ":h");
            } else {
                pc.to = fresh_node("cut:" + edge.id + "@" + b.str() + ":l");
            }
            // restricted profile, rebased to [0, b-a]
            pc.prof.push_back({Rat(0), interpolate(bp, a)});
            for (auto& [t, y] : bp)
                if (a < t && t < b) pc.prof.push_back({t - a, y});
            pc.prof.push_back({b - a, interpolate(bp, b)});
            pieces.push_back(std::move(pc));
        }
    }

    DSU dsu(int(nodes.size()));
    for (auto& pc : pieces) dsu.unite(pc.from, pc.to);

    std::map<int, int> comp_of_root;
    auto comp_id = [&](int node) {
        int r = dsu.find(node);
        auto it = comp_of_root.find(r);
        if (it != comp_of_root.end()) return it->second;
        int c = int(comp_of_root.size());
        comp_of_root[r] = c;
        return c;
    };

    SplitResult res;
    int ncomp = 0;
    for (size_t i = 0; i < nodes.size(); ++i) ncomp = std::max(ncomp, comp_id(int(i)) + 1);
    res.parts.resize(ncomp);
    for (int c = 0; c < ncomp; ++c)
        res.parts[c].divisor.curve_label = div.curve_label + "#part" + std::to_string(c);

    for (size_t i = 0; i < nodes.size(); ++i) {
        auto& part = res.parts[comp_id(int(i))];
        part.curve.vertices.push_back({nodes[i].id, nodes[i].at_infinity});
    }
    for (auto& pc : pieces) {
        auto& part = res.parts[comp_id(pc.from)];
        part.curve.edges.push_back({pc.id, nodes[pc.from].id, nodes[pc.to].id, pc.length});
        part.divisor.profiles.push_back({pc.id, pc.prof});
    }

    for (auto& part : res.parts) {
        ValidationReport rep = validate(part.curve, part.divisor);
        if (!rep.ok()) throw std::logic_error("split produced an invalid part: " + rep.summary());
        part.euler = lmd(part.curve, part.divisor).euler();
        part.rotation = rotation_number(part.curve, part.divisor);
    }

    // each cut point reappears once per local branch
    res.correction = 0;
    for (auto& vid : cut_vertices)
        res.correction += (long long)rv.ends[rv.vidx.at(vid)].size() - 1;
    for (auto& [eid, ps] : cut_positions) {
        (void)eid;
        res.correction += (long long)ps.size(); // 2 branches each, minus 1
    }

    res.euler_whole = lmd(curve, div).euler();
    res.rotation_whole = rotation_number(curve, div);
    long long esum = 0, rsum = 0;
    for (auto& part : res.parts) {
        esum += part.euler;
        rsum += part.rotation;
    }
    res.euler_ok = (res.euler_whole == esum - res.correction);
    res.rotation_ok = (res.rotation_whole == rsum);
    return res;
}

} // namespace tropmorse
