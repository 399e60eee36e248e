#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "tropmorse/compose.hpp"
#include "tropmorse/fixtures.hpp"
#include "tropmorse/gen.hpp"

using namespace tropmorse;

namespace {

fixtures::CurveFixture cfix(const std::string& name) {
    auto fx = fixtures::curve_fixture(name);
    REQUIRE_MESSAGE(fx.has_value(), name);
    return *fx;
}

TorusQuadraticDivisor tfix(const std::string& name) {
    auto d = fixtures::torus_fixture(name);
    REQUIRE_MESSAGE(d.has_value(), name);
    return *d;
}

IndexedPointSet curve_points(const std::string& name) {
    auto fx = cfix(name);
    REQUIRE(validate(fx.curve, fx.divisor).ok());
    return point_set_from_curve(fx.curve, fx.divisor);
}

} // namespace

TEST_CASE("Kunneth tensors point modules pairwise") {
    auto a = point_set_from_torus(tfix("torus_s2"));  // 2 pts, deg 0
    auto b = point_set_from_torus(tfix("torus_s1")); // 1 pt, deg 0
    auto prod = kunneth(a, b);
    CHECK(prod.points.size() == 2);
    CHECK(prod.total_euler() == 2);
    for (auto& p : prod.points) CHECK(p.module == GradedModule::free(0, 1));
    CHECK(prod.points[0].label.front() == '(');
    CHECK(prod.points[0].label.find(',') != std::string::npos);

    // a negative-index factor shifts every product point by one degree,
    // matching the block-diagonal section on the product torus
    TorusQuadraticDivisor neg;
    neg.n = 1;
    neg.matrix = {{-1}};
    neg.shift = {Rat(0)};
    auto c = point_set_from_torus(neg);
    auto prod2 = kunneth(a, c);
    CHECK(prod2.points.size() == 2);
    for (auto& p : prod2.points) CHECK(p.module == GradedModule::free(1, 1));
    CHECK(prod2.total_euler() == -2);

    TorusQuadraticDivisor block;
    block.n = 2;
    block.matrix = {{2, 0}, {0, -1}};
    block.shift = {Rat(0), Rat(0)};
    auto direct = point_set_from_torus(block);
    CHECK(direct.total_euler() == prod2.total_euler());
    GradedModule lhs, rhs;
    for (auto& p : prod2.points) lhs = lhs.direct_sum(p.module);
    for (auto& p : direct.points) rhs = rhs.direct_sum(p.module);
    CHECK(lhs == rhs);
}

TEST_CASE("Euler characteristic of a product of curves factors") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto a = cfix("tp1_s" + std::to_string(m));
            auto b = cfix("tp1_s" + std::to_string(n));
            auto chk = verify_product_rr(a.curve, a.divisor, b.curve, b.divisor);
            CHECK(chk.ok);
            CHECK(chk.factor1 == m + 1);
            CHECK(chk.factor2 == n + 1);
            CHECK(chk.euler_product == (m + 1) * (n + 1));
        }
    auto e = cfix("elliptic_s2");
    auto t = cfix("tp1_s3");
    auto chk = verify_product_rr(e.curve, e.divisor, t.curve, t.divisor);
    CHECK(chk.ok);
    CHECK(chk.euler_product == 2 * 4);
}

TEST_CASE("disjoint scaling copies the point set") {
    auto base = curve_points("elliptic_s3");
    REQUIRE(base.points.size() == 3);
    auto one = etale_scale(base, 1);
    CHECK(one.points.size() == 3);
    CHECK(one.total_euler() == base.total_euler());

    auto three = etale_scale(base, 3);
    CHECK(three.points.size() == 9);
    CHECK(three.total_euler() == 3 * base.total_euler());
    std::set<std::string> labels;
    for (auto& p : three.points) labels.insert(p.label);
    CHECK(labels.size() == 9); // all labels distinct
    CHECK_NOTHROW(three.require_unique_labels());

    CHECK_THROWS_AS(etale_scale(base, 0), std::invalid_argument);
}

TEST_CASE("cyclic covers of a circle multiply the Euler characteristic") {
    for (int n = 1; n <= 4; ++n) {
        auto fx = cfix("elliptic_s" + std::to_string(n));
        for (long long d : {1, 2, 3}) {
            auto covered = cyclic_cover(fx.curve, fx.divisor, d);
            CHECK(covered.total_euler() == d * n);
        }
    }

    // the covering curve itself is a valid circle again
    auto fx = cfix("elliptic_s2");
    auto [cc, cd] = cyclic_cover_data(fx.curve, fx.divisor, 3);
    CHECK(validate(cc, cd).ok());
    CHECK(cc.edges.size() == 3);
    long long total = 0;
    for (auto& e : cc.edges) {
        const auto* prof = cd.profile_for(e.id);
        REQUIRE(prof != nullptr);
        total += (prof->back().second - prof->front().second).num();
    }
    CHECK(total == 6); // lifted winding = d * base winding

    // a base with a leaf at infinity or a trivalent vertex is not a circle
    auto star = cfix("star_3_0");
    CHECK_THROWS_AS(cyclic_cover(star.curve, star.divisor, 2), std::invalid_argument);
    auto tp1 = cfix("tp1_s2");
    CHECK_THROWS_AS(cyclic_cover(tp1.curve, tp1.divisor, 2), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_cover(fx.curve, fx.divisor, 0), std::invalid_argument);
}

TEST_CASE("symmetric power Euler characteristics") {
    // two simple points: chi = 2, sym^2 should carry chi = 3
    IndexedPointSet two;
    two.points.push_back({"p", GradedModule::free(0, 1)});
    two.points.push_back({"q", GradedModule::free(0, 1)});
    auto s = verify_sym(two, 2);
    CHECK(s.ok);
    CHECK(s.chi == 2);
    CHECK(s.formula == 3);
    CHECK(s.series == 3);

    // chi = 0: every positive symmetric power vanishes
    IndexedPointSet null;
    null.points.push_back({"a", GradedModule::free(0, 1)});
    null.points.push_back({"b", GradedModule::free(1, 1)});
    for (long long n = 1; n <= 5; ++n) {
        auto z = verify_sym(null, n);
        CHECK(z.ok);
        CHECK(z.formula == 0);
    }
    auto z0 = verify_sym(null, 0);
    CHECK(z0.formula == 1); // sym^0 is the ground field

    // projective line with a degree-1 divisor: chi = 2 + 1 = ... the
    // fixture tp1_s1 has euler 2, and sym^3 of chi = 2 is 4
    auto tp1 = curve_points("tp1_s1");
    CHECK(tp1.total_euler() == 2);
    auto s3 = verify_sym(tp1, 3);
    CHECK(s3.ok);
    CHECK(s3.formula == 4);

    // negative chi alternates: chi = -1 gives 1, -1, 0, 0, ...
    IndexedPointSet negext;
    negext.points.push_back({"m", GradedModule::free(1, 1)});
    CHECK(verify_sym(negext, 1).formula == -1);
    CHECK(verify_sym(negext, 2).formula == 0);
    CHECK(verify_sym(negext, 3).formula == 0);
}

TEST_CASE("symmetric power formula agrees with the series on random sets") {
    SplitMix64 rng(2024);
    for (int rep = 0; rep < 40; ++rep) {
        IndexedPointSet pts;
        int k = 1 + int(rng.range(0, 4));
        for (int i = 0; i < k; ++i) {
            int deg = int(rng.range(0, 2));
            int rank = 1 + int(rng.range(0, 2));
            pts.points.push_back({"p" + std::to_string(i), GradedModule::free(deg, rank)});
        }
        if (std::llabs(pts.total_euler()) > 8) continue;
        for (long long n = 0; n <= 12; ++n) {
            auto s = verify_sym(pts, n);
            INFO("chi=" << s.chi << " n=" << n);
            CHECK(s.ok);
            CHECK(s.formula == s.series);
        }
    }
}

TEST_CASE("duplicate labels are rejected") {
    IndexedPointSet pts;
    pts.points.push_back({"x", GradedModule::free(0, 1)});
    pts.points.push_back({"x", GradedModule::free(0, 1)});
    CHECK_THROWS_AS(pts.require_unique_labels(), std::invalid_argument);
}
