#include "tropmorse/gen.hpp"

#include <stdexcept>
#include <unordered_map>

namespace tropmorse {

TropicalCurve random_curve(uint64_t seed, int genus, int leaves) {
    if (genus < 0 || leaves < 0) throw std::invalid_argument("negative genus or leaf count");
    SplitMix64 rng(seed ^ 0xc28f1c5df38b7f2bULL);

    // size the core so valence 3 always suffices: a tree on n vertices has
    // spare valence n+2, extra edges take 2 and leaves take 1
    int n = std::max(1, 2 * (genus + leaves) - 2);
    int slack = int(std::max<long long>(0, std::min<long long>(2, 15 - 3 * (genus + leaves))));
    if (slack > 0) n += int(rng.range(0, slack));

    TropicalCurve c;
    std::vector<int> val(n, 0);
    for (int i = 0; i < n; ++i) c.vertices.push_back({"v" + std::to_string(i), false});

    auto rand_len = [&rng]() { return Rat(rng.range(1, 4), rng.range(1, 3)); };
    int eid = 0;
    auto add_edge = [&](int a, int b) {
        c.edges.push_back({"e" + std::to_string(eid++), c.vertices[a].id, c.vertices[b].id,
                           rand_len()});
        ++val[a];
        ++val[b];
    };

    for (int i = 1; i < n; ++i) {
        std::vector<int> open; // never empty: a tree cannot saturate every vertex
        for (int j = 0; j < i; ++j)
            if (val[j] <= 2) open.push_back(j);
        add_edge(open[rng.range(0, (long long)open.size() - 1)], i);
    }

    for (int g = 0; g < genus; ++g) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (val[a] <= 2 && val[b] <= 2) pairs.push_back({a, b});
        if (!pairs.empty()) {
            auto [a, b] = pairs[rng.range(0, (long long)pairs.size() - 1)];
            add_edge(a, b);
        } else {
            std::vector<int> loopable;
            for (int a = 0; a < n; ++a)
                if (val[a] <= 1) loopable.push_back(a);
            if (loopable.empty()) throw std::logic_error("no valence budget for extra edge");
            int a = loopable[rng.range(0, (long long)loopable.size() - 1)];
            add_edge(a, a);
        }
    }

    for (int l = 0; l < leaves; ++l) {
        std::vector<int> open;
        for (int a = 0; a < n; ++a)
            if (val[a] <= 2) open.push_back(a);
        if (open.empty()) throw std::logic_error("no valence budget for leaf");
        int a = open[rng.range(0, (long long)open.size() - 1)];
        std::string wid = "w" + std::to_string(l);
        c.vertices.push_back({wid, true});
        c.edges.push_back({"e" + std::to_string(eid++), c.vertices[a].id, wid, rand_len()});
        ++val[a];
    }
    return c;
}

namespace {

Rat rand_frac(SplitMix64& rng, bool allow_integer) {
    static const Rat menu[] = {Rat(0), Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1, 4), Rat(3, 4)};
    int lo = allow_integer ? 0 : 1;
    return menu[rng.range(lo, 5)];
}

} // namespace

CurveDivisor random_divisor(const TropicalCurve& curve, uint64_t seed, int max_level,
                            int breakpoints_per_edge) {
    if (max_level < 1)
        throw std::invalid_argument("random_divisor: max_level must be at least 1");
    if (breakpoints_per_edge < 0)
        throw std::invalid_argument("random_divisor: negative breakpoint count");
    SplitMix64 rng(seed ^ 0x9d1a52c4b7a63be9ULL);
    long long L = max_level;

    std::unordered_map<std::string, int> vidx;
    for (size_t i = 0; i < curve.vertices.size(); ++i) vidx[curve.vertices[i].id] = int(i);
    struct End {
        int edge;
        bool at_tail;
    };
    std::vector<std::vector<End>> ends(curve.vertices.size());
    for (size_t e = 0; e < curve.edges.size(); ++e) {
        ends[vidx.at(curve.edges[e].tail)].push_back({int(e), true});
        ends[vidx.at(curve.edges[e].head)].push_back({int(e), false});
    }

    // outgoing derivative drawn per vertex end, then converted to profile
    // endpoint values (tail keeps the sign, head flips it)
    std::vector<std::pair<Rat, Rat>> end_vals(curve.edges.size()); // tail value, head value
    auto set_end = [&](const End& r, const Rat& outgoing) {
        Rat value = r.at_tail ? outgoing : -outgoing;
        if (r.at_tail) end_vals[r.edge].first = value;
        else end_vals[r.edge].second = value;
    };

    for (size_t v = 0; v < curve.vertices.size(); ++v) {
        const auto& vr = ends[v];
        if (curve.vertices[v].at_infinity) {
            set_end(vr[0], Rat(0));
            continue;
        }
        if (vr.size() == 2) {
            Rat r = Rat(rng.range(-L + 1, L - 1)) + rand_frac(rng, true);
            long long jump = rng.range(-1, 1);
            set_end(vr[0], r);
            set_end(vr[1], Rat(jump) - r);
            continue;
        }
        Rat sum(0);
        for (size_t i = 0; i < vr.size(); ++i) {
            if (vr.size() >= 3 && i + 1 == vr.size()) {
                set_end(vr[i], -sum);
            } else {
                Rat o(rng.range(-L, L));
                sum += o;
                set_end(vr[i], o);
            }
        }
    }

    CurveDivisor div;
    div.curve_label = "random";
    for (size_t e = 0; e < curve.edges.size(); ++e) {
        const Rat len = curve.edges[e].length;
        CurveDivisor::Profile prof;
        prof.push_back({Rat(0), end_vals[e].first});
        for (int i = 1; i <= breakpoints_per_edge; ++i) {
            Rat jitter(rng.range(-1, 1), 4);
            Rat pos = len * (Rat(i) + jitter) / Rat(breakpoints_per_edge + 1);
            Rat val = Rat(rng.range(-L, L)) + rand_frac(rng, true);
            prof.push_back({pos, val});
        }
        prof.push_back({len, end_vals[e].second});

        // knock out integer plateaus; endpoint values stay pinned
        for (int pass = 0; pass < 16; ++pass) {
            bool dirty = false;
            for (size_t i = 0; i + 1 < prof.size(); ++i) {
                if (prof[i].second != prof[i + 1].second || !prof[i].second.is_integer())
                    continue;
                if (i + 1 < prof.size() - 1) {
                    prof[i + 1].second += Rat(1, 3);
                } else if (i > 0) {
                    prof[i].second += Rat(1, 3);
                } else {
                    Rat mid = (prof[i].first + prof[i + 1].first) / Rat(2);
                    prof.insert(prof.begin() + 1, {mid, prof[i].second + Rat(1, 2)});
                }
                dirty = true;
                break;
            }
            if (!dirty) break;
        }
        div.profiles.push_back({curve.edges[e].id, std::move(prof)});
    }
    return div;
}

} // namespace tropmorse
