#include "tropmorse/json_io.hpp"

#include <fstream>
#include <sstream>

namespace tropmorse {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw IOError(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw IOError(std::string("missing field '") + key + "'");
    return *it;
}

std::string as_string(const json& j, const char* what) {
    if (!j.is_string()) throw IOError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

long long as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw IOError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

Rat as_rat(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (!j.is_string()) throw IOError(std::string(what) + " must be a rational string");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw IOError(std::string(what) + ": " + e.what());
    }
}

std::vector<long long> as_int_vector(const json& j, const char* what) {
    if (!j.is_array()) throw IOError(std::string(what) + " must be an array");
    std::vector<long long> out;
    for (auto& x : j) out.push_back(as_int(x, what));
    return out;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TropicalCurve parse_curve_json(const std::string& text) {
    json j = parse_text(text);
    TropicalCurve c;
    const json& vs = field(j, "vertices");
    if (!vs.is_array()) throw IOError("'vertices' must be an array");
    for (auto& v : vs) {
        TropicalCurve::Vertex vert;
        vert.id = as_string(field(v, "id"), "vertex id");
        const json& inf = field(v, "at_infinity");
        if (!inf.is_boolean()) throw IOError("'at_infinity' must be a boolean");
        vert.at_infinity = inf.get<bool>();
        c.vertices.push_back(std::move(vert));
    }
    const json& es = field(j, "edges");
    if (!es.is_array()) throw IOError("'edges' must be an array");
    for (auto& e : es) {
        TropicalCurve::Edge edge;
        edge.id = as_string(field(e, "id"), "edge id");
        edge.tail = as_string(field(e, "tail"), "edge tail");
        edge.head = as_string(field(e, "head"), "edge head");
        edge.length = as_rat(field(e, "length"), "edge length");
        c.edges.push_back(std::move(edge));
    }
    return c;
}

CurveDivisor parse_divisor_json(const std::string& text) {
    json j = parse_text(text);
    CurveDivisor d;
    d.curve_label = as_string(field(j, "curve"), "divisor curve label");
    const json& profs = field(j, "profiles");
    if (!profs.is_object()) throw IOError("'profiles' must be an object");
    for (auto& [eid, bps] : profs.items()) {
        if (!bps.is_array()) throw IOError("profile must be an array of breakpoints");
        CurveDivisor::Profile prof;
        for (auto& bp : bps) {
            if (!bp.is_array() || bp.size() != 2)
                throw IOError("breakpoint must be a [position, value] pair");
            prof.push_back({as_rat(bp[0], "breakpoint position"),
                            as_rat(bp[1], "breakpoint value")});
        }
        d.profiles.push_back({eid, std::move(prof)});
    }
    return d;
}

TorusQuadraticDivisor parse_torus_json(const std::string& text) {
    json j = parse_text(text);
    TorusQuadraticDivisor d;
    d.n = int(as_int(field(j, "n"), "n"));
    const json& m = field(j, "matrix");
    if (!m.is_array()) throw IOError("'matrix' must be an array of rows");
    for (auto& row : m) d.matrix.push_back(as_int_vector(row, "matrix entry"));
    const json& s = field(j, "shift");
    if (!s.is_array()) throw IOError("'shift' must be an array");
    for (auto& x : s) d.shift.push_back(as_rat(x, "shift entry"));
    return d;
}

std::vector<std::vector<long long>> parse_lattice_json(const std::string& text) {
    json j = parse_text(text);
    long long n = as_int(field(j, "n"), "n");
    const json& m = field(j, "lattice");
    if (!m.is_array()) throw IOError("'lattice' must be an array of rows");
    std::vector<std::vector<long long>> out;
    for (auto& row : m) out.push_back(as_int_vector(row, "lattice entry"));
    if ((long long)out.size() != n) throw IOError("'lattice' row count differs from n");
    for (auto& row : out)
        if ((long long)row.size() != n) throw IOError("'lattice' is not square");
    return out;
}

LatticePolytope parse_polytope_json(const std::string& text) {
    json j = parse_text(text);
    LatticePolytope P;
    P.n = int(as_int(field(j, "n"), "n"));
    const json& vs = field(j, "vertices");
    if (!vs.is_array()) throw IOError("'vertices' must be an array");
    for (auto& v : vs) P.vertices.push_back(as_int_vector(v, "vertex coordinate"));
    const json& fs = field(j, "facets");
    if (!fs.is_array()) throw IOError("'facets' must be an array");
    for (auto& f : fs) {
        LatticePolytope::Facet facet;
        facet.a = as_int_vector(field(f, "a"), "facet normal");
        facet.b = as_int(field(f, "b"), "facet offset");
        P.facets.push_back(std::move(facet));
    }
    return P;
}

IndexedPointSet parse_point_set_json(const std::string& text) {
    json j = parse_text(text);
    IndexedPointSet s;
    const json& ps = field(j, "points");
    if (!ps.is_array()) throw IOError("'points' must be an array");
    for (auto& p : ps) {
        IndexedPointSet::Point pt;
        pt.label = as_string(field(p, "label"), "point label");
        const json& lmd = field(p, "lmd");
        if (!lmd.is_array()) throw IOError("'lmd' must be an array of [degree, rank] pairs");
        GradedModule m;
        for (auto& pair : lmd) {
            if (!pair.is_array() || pair.size() != 2)
                throw IOError("'lmd' entries must be [degree, rank] pairs");
            m = m.direct_sum(GradedModule::free(int(as_int(pair[0], "degree")),
                                                as_int(pair[1], "rank")));
        }
        pt.module = std::move(m);
        s.points.push_back(std::move(pt));
    }
    if (auto it = j.find("euler"); it != j.end()) {
        if (as_int(*it, "euler") != s.total_euler())
            throw IOError("'euler' does not match the sum over points");
    }
    return s;
}

nlohmann::json curve_to_json(const TropicalCurve& c) {
    json vs = json::array();
    for (auto& v : c.vertices) vs.push_back({{"id", v.id}, {"at_infinity", v.at_infinity}});
    json es = json::array();
    for (auto& e : c.edges)
        es.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head},
                      {"length", e.length.str()}});
    return json{{"vertices", vs}, {"edges", es}};
}

nlohmann::json divisor_to_json(const CurveDivisor& d) {
    json profs = json::object();
    for (auto& [eid, prof] : d.profiles) {
        json bps = json::array();
        for (auto& [pos, val] : prof) bps.push_back(json::array({pos.str(), val.str()}));
        profs[eid] = std::move(bps);
    }
    return json{{"curve", d.curve_label}, {"profiles", profs}};
}

nlohmann::json lmd_to_json(const GradedModule& m) {
    json out = json::array();
    for (auto& [deg, rank] : m.betti()) out.push_back(json::array({deg, rank}));
    return out;
}

nlohmann::json intersection_point_to_json(const IntersectionPoint& pt) {
    json j;
    if (pt.at_vertex) j["location"] = {{"vertex", pt.vertex_id}};
    else j["location"] = {{"edge", pt.edge_id}, {"position", pt.position.str()}};
    j["kind"] = IntersectionPoint::kind_name(pt.kind);
    switch (pt.kind) {
        case IntersectionPoint::Kind::VertexStar:
            j["p"] = pt.p;
            j["q"] = pt.q;
            j["slopes"] = pt.slopes;
            break;
        case IntersectionPoint::Kind::InfiniteLeaf:
            j["ascending"] = pt.ascending;
            j["level"] = pt.level;
            break;
        default:
            j["level"] = pt.level;
            break;
    }
    j["lmd"] = lmd_to_json(local_lmd(pt));
    j["euler"] = local_lmd(pt).euler();
    return j;
}

nlohmann::json point_set_to_json(const IndexedPointSet& s) {
    json pts = json::array();
    for (auto& p : s.points)
        pts.push_back({{"label", p.label}, {"lmd", lmd_to_json(p.module)}});
    return json{{"points", pts}, {"euler", s.total_euler()}};
}

} // namespace tropmorse
