#include <doctest.h>

#include <set>
#include <vector>

#include "tropmorse/gen.hpp"
#include "tropmorse/json_io.hpp"

using namespace tropmorse;

namespace {

int first_betti(const TropicalCurve& c) {
    return int(c.edges.size()) - int(c.vertices.size()) + 1;
}

bool connected(const TropicalCurve& c) {
    if (c.vertices.empty()) return false;
    std::vector<std::vector<int>> adj(c.vertices.size());
    for (auto& e : c.edges) {
        int t = c.vertex_index(e.tail), h = c.vertex_index(e.head);
        adj[t].push_back(h);
        adj[h].push_back(t);
    }
    std::vector<char> seen(c.vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    for (char s : seen)
        if (!s) return false;
    return true;
}

} // namespace

TEST_CASE("random curves are reproducible") {
    auto a = random_curve(12345, 2, 1);
    auto b = random_curve(12345, 2, 1);
    CHECK(curve_to_json(a).dump() == curve_to_json(b).dump());
    auto c = random_curve(54321, 2, 1);
    CHECK(curve_to_json(a).dump() != curve_to_json(c).dump());
}

TEST_CASE("random divisors are reproducible") {
    auto c = random_curve(7, 1, 2);
    auto d1 = random_divisor(c, 99, 3, 2);
    auto d2 = random_divisor(c, 99, 3, 2);
    CHECK(divisor_to_json(d1).dump() == divisor_to_json(d2).dump());
}

TEST_CASE("random curves have the requested shape") {
    uint64_t seed = 1000;
    for (int genus = 0; genus <= 4; ++genus)
        for (int leaves = 0; leaves <= 3; ++leaves) {
            if (genus + leaves > 5) continue;
            for (int rep = 0; rep < 5; ++rep) {
                auto c = random_curve(seed++, genus, leaves);
                CHECK(connected(c));
                CHECK(first_betti(c) == genus);
                CHECK(c.edges.size() <= 12);
                int at_inf = 0;
                std::vector<int> val(c.vertices.size(), 0);
                for (auto& e : c.edges) {
                    ++val[c.vertex_index(e.tail)];
                    ++val[c.vertex_index(e.head)];
                }
                for (size_t i = 0; i < c.vertices.size(); ++i) {
                    if (c.vertices[i].at_infinity) {
                        ++at_inf;
                        CHECK(val[i] == 1);
                    } else {
                        CHECK(val[i] <= 3);
                        // a genus-0 leafless curve may be a lone vertex
                        if (c.vertices.size() > 1) CHECK(val[i] >= 1);
                    }
                }
                CHECK(at_inf == leaves);
            }
        }
}

TEST_CASE("random divisors always validate") {
    uint64_t seed = 5000;
    int checked = 0;
    for (int rep = 0; rep < 200; ++rep) {
        int genus = rep % 5;
        int leaves = (rep / 5) % 4;
        if (genus + leaves > 5) leaves = 5 - genus;
        auto c = random_curve(seed++, genus, leaves);
        auto d = random_divisor(c, seed++, 1 + rep % 5, rep % 5);
        auto vr = validate(c, d);
        INFO(vr.summary());
        CHECK(vr.ok());
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("generated divisors reach both signs of local index") {
    uint64_t seed = 42;
    bool saw_plus = false, saw_minus = false;
    for (int rep = 0; rep < 60 && !(saw_plus && saw_minus); ++rep) {
        auto c = random_curve(seed++, 2, 1);
        auto d = random_divisor(c, seed++, 3, 2);
        REQUIRE(validate(c, d).ok());
        for (auto& p : intersection_points(c, d)) {
            long long e = local_lmd(p).euler();
            if (e > 0) saw_plus = true;
            if (e < 0) saw_minus = true;
        }
    }
    CHECK(saw_plus);
    CHECK(saw_minus);
}

TEST_CASE("generator argument checking") {
    auto c = random_curve(1, 0, 2);
    CHECK_THROWS_AS(random_divisor(c, 1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(random_curve(1, -1, 0), std::invalid_argument);
}
