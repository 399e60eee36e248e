#include <doctest.h>

#include "tropmorse/fixtures.hpp"
#include "tropmorse/json_io.hpp"

using namespace tropmorse;

TEST_CASE("rational parsing and printing") {
    CHECK(Rat::parse("3").str() == "3");
    CHECK(Rat::parse("-3/6").str() == "-1/2");
    CHECK(Rat::parse("4/2").str() == "2");
    CHECK(Rat::parse("0/5") == Rat(0));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
}

TEST_CASE("curve and divisor round-trip through json") {
    auto f = fixtures::curve_fixture("tp1_s3");
    REQUIRE(f.has_value());
    auto ctext = curve_to_json(f->curve).dump();
    auto dtext = divisor_to_json(f->divisor).dump();
    auto c2 = parse_curve_json(ctext);
    auto d2 = parse_divisor_json(dtext);
    CHECK(curve_to_json(c2).dump() == ctext);
    CHECK(divisor_to_json(d2).dump() == dtext);
    CHECK(c2.vertices.size() == 3);
    CHECK(c2.edges.size() == 2);
    CHECK(d2.profiles.size() == 2);
}

TEST_CASE("curve parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_curve_json("{\"vertices\": ["), IOError);
    CHECK_THROWS_AS(parse_curve_json("{\"edges\": []}"), IOError);
    CHECK_THROWS_AS(parse_curve_json("{\"vertices\": [{\"id\": \"v\"}], \"edges\": []}"),
                    IOError); // missing at_infinity
    CHECK_THROWS_AS(
        parse_curve_json("{\"vertices\": [{\"id\": \"v\", \"at_infinity\": false}], "
                         "\"edges\": [{\"id\":\"e\",\"tail\":\"v\",\"head\":\"v\","
                         "\"length\":\"1/0\"}]}"),
        IOError);
    CHECK_THROWS_AS(parse_divisor_json("{\"curve\": \"c\", \"profiles\": []}"), IOError);
    CHECK_THROWS_AS(
        parse_divisor_json("{\"curve\": \"c\", \"profiles\": {\"e\": [[\"0\"]]}}"), IOError);
}

TEST_CASE("torus input parsing") {
    auto d = parse_torus_json(
        "{\"n\": 2, \"matrix\": [[2, 1], [1, 3]], \"shift\": [\"1/2\", 0]}");
    CHECK(d.n == 2);
    CHECK(d.matrix[0][1] == 1);
    CHECK(d.shift[0] == Rat(1, 2));
    CHECK(d.shift[1] == Rat(0));
    CHECK_THROWS_AS(parse_torus_json("{\"n\": 2, \"matrix\": [[2]]}"), IOError);
    CHECK_THROWS_AS(parse_torus_json("{\"n\": 2, \"matrix\": [[1, 0], [0, 1]], "
                                     "\"shift\": [\"a\", 0]}"),
                    IOError);
}

TEST_CASE("lattice input parsing") {
    auto L = parse_lattice_json("{\"n\": 2, \"lattice\": [[2, 0], [0, 3]]}");
    CHECK(L.size() == 2);
    CHECK(L[1][1] == 3);
    CHECK_THROWS_AS(parse_lattice_json("{\"n\": 3, \"lattice\": [[2, 0], [0, 3]]}"), IOError);
    CHECK_THROWS_AS(parse_lattice_json("{\"n\": 2, \"lattice\": [[2, 0], [0]]}"), IOError);
}

TEST_CASE("polytope input parsing") {
    auto P = parse_polytope_json(
        "{\"n\": 1, \"vertices\": [[0], [5]], "
        "\"facets\": [{\"a\": [-1], \"b\": 0}, {\"a\": [1], \"b\": 5}]}");
    CHECK(P.n == 1);
    CHECK(P.vertices.size() == 2);
    CHECK(P.facets[1].b == 5);
    CHECK_THROWS_AS(parse_polytope_json("{\"n\": 1, \"vertices\": [[0]]}"), IOError);
    CHECK_THROWS_AS(parse_polytope_json("{\"n\": 1, \"vertices\": [[0]], "
                                        "\"facets\": [{\"a\": [1]}]}"),
                    IOError);
}

TEST_CASE("point set parsing checks the euler field") {
    auto ps = parse_point_set_json(
        "{\"points\": [{\"label\": \"a\", \"lmd\": [[0, 2]]}, "
        "{\"label\": \"b\", \"lmd\": [[1, 1]]}], \"euler\": 1}");
    CHECK(ps.points.size() == 2);
    CHECK(ps.total_euler() == 1);
    CHECK_THROWS_AS(parse_point_set_json(
                        "{\"points\": [{\"label\": \"a\", \"lmd\": [[0, 2]]}], \"euler\": 5}"),
                    IOError);
    CHECK_THROWS_AS(parse_point_set_json("{\"points\": [{\"lmd\": [[0, 2]]}]}"), IOError);
}

TEST_CASE("module serialization is sorted by degree") {
    auto m = GradedModule::free(2, 1).direct_sum(GradedModule::free(0, 3));
    auto j = lmd_to_json(m);
    REQUIRE(j.size() == 2);
    CHECK(j[0][0] == 0);
    CHECK(j[0][1] == 3);
    CHECK(j[1][0] == 2);
    CHECK(j[1][1] == 1);
}

TEST_CASE("read_file reports missing files") {
    CHECK_THROWS_AS(read_file("/nonexistent/path/file.json"), IOError);
}
