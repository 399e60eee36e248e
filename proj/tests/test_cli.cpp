#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "tropmorse/cli.hpp"

using namespace tropmorse;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "cli_test_" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& body)
        : path(write_temp(name, body)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("curve check on a built-in fixture") {
    auto out = cli::curve_check("fixture:elliptic_s3", "");
    CHECK(out.exit_code == 0);
    CHECK(out.report.at("ok") == true);
    auto& res = out.report.at("results");
    CHECK(res.at("euler") == 3);
    CHECK(res.at("degree") == 3);
    CHECK(res.at("chi_top") == 0);
    CHECK(res.at("rotation") == 3);
    CHECK(res.at("rr_ok") == true);
    CHECK(res.at("points").size() == 3);
    CHECK(out.report.at("inputs").size() == 1);
    CHECK(out.report.at("inputs")[0].at("source") == "fixture:elliptic_s3");
    CHECK(out.text.find("euler") != std::string::npos);
}

TEST_CASE("curve fixtures reject an extra divisor argument") {
    auto out = cli::curve_check("fixture:elliptic_s3", "anything.json");
    CHECK(out.exit_code == 3);
    CHECK(out.report.at("ok") == false);
}

TEST_CASE("unknown fixture names are I/O errors") {
    CHECK(cli::curve_check("fixture:no_such_thing", "").exit_code == 3);
    CHECK(cli::torus_check("fixture:elliptic_s1").exit_code == 3);
    CHECK(cli::ehrhart_report("fixture:bogus", 4).exit_code == 3);
}

TEST_CASE("missing files and malformed JSON are I/O errors") {
    CHECK(cli::curve_check("/nonexistent/curve.json", "/nonexistent/div.json").exit_code == 3);
    TempFile broken("broken.json", "{ not json");
    CHECK(cli::torus_check(broken.path).exit_code == 3);
}

TEST_CASE("a curve file needs a divisor file") {
    TempFile curve("lonely_curve.json", R"({
        "label": "c",
        "vertices": [{"id": "v", "at_infinity": false}],
        "edges": [{"id": "e", "tail": "v", "head": "v", "length": "1"}]
    })");
    CHECK(cli::curve_check(curve.path, "").exit_code == 3);
}

TEST_CASE("validation failures exit 1 and explain themselves") {
    TempFile curve("claw_curve.json", R"({
        "label": "claw",
        "vertices": [
            {"id": "c", "at_infinity": false},
            {"id": "l1", "at_infinity": true},
            {"id": "l2", "at_infinity": true},
            {"id": "l3", "at_infinity": true}
        ],
        "edges": [
            {"id": "e1", "tail": "c", "head": "l1", "length": "2"},
            {"id": "e2", "tail": "c", "head": "l2", "length": "3"},
            {"id": "e3", "tail": "c", "head": "l3", "length": "1"}
        ]
    })");
    // outgoing slope 1/2 at a trivalent vertex: not permissible
    TempFile div("claw_div.json", R"({
        "curve": "claw",
        "profiles": {
            "e1": [["0", "1/2"], ["2", "1"]],
            "e2": [["0", "0"], ["1", "-1"], ["3", "-2"]],
            "e3": [["0", "0"], ["1", "1"]]
        }
    })");
    auto out = cli::curve_check(curve.path, div.path);
    CHECK(out.exit_code == 1);
    CHECK(out.report.at("ok") == false);
    std::string dump = out.report.dump();
    CHECK(dump.find("integer") != std::string::npos);
}

TEST_CASE("torus check reports the intersection data") {
    auto out = cli::torus_check("fixture:torus_diag_2_3");
    CHECK(out.exit_code == 0);
    auto& res = out.report.at("results");
    CHECK(res.at("count") == 6);
    CHECK(res.at("index") == 0);
    CHECK(res.at("euler") == 6);
    CHECK(res.at("chern_volume") == 6);
    CHECK(res.at("rr_ok") == true);
}

TEST_CASE("degenerate torus sections report null counts") {
    auto out = cli::torus_check("fixture:torus_diag_0_1");
    CHECK(out.exit_code == 0);
    auto& res = out.report.at("results");
    CHECK(res.at("degenerate") == true);
    CHECK(res.at("count").is_null());
    CHECK(res.at("index").is_null());
}

TEST_CASE("bs count and ehrhart subcommands") {
    auto bs = cli::bs_count("fixture:lattice_diag_2_3");
    CHECK(bs.exit_code == 0);
    CHECK(bs.report.at("results").at("count") == 6);

    auto eh = cli::ehrhart_report("fixture:cube_3", 4);
    CHECK(eh.exit_code == 0);
    auto& res = eh.report.at("results");
    CHECK(res.at("ehrhart") == json::array({"1", "3", "3", "1"}));
    CHECK(res.at("evaluation_ok") == true);
    CHECK(res.at("reciprocity_ok") == true);
    CHECK(res.at("counts").size() == 4);

    // non-full-dimensional input is a validation failure
    CHECK(cli::ehrhart_report("fixture:point_0", 4).exit_code == 1);
    CHECK(cli::toric_lmd_report("fixture:point_0").exit_code == 1);
}

TEST_CASE("toric lmd subcommand") {
    auto out = cli::toric_lmd_report("fixture:segment_0_5");
    CHECK(out.exit_code == 0);
    auto& res = out.report.at("results");
    CHECK(res.at("lattice_count") == 6);
    CHECK(res.at("interior_count") == 4);
    CHECK(res.at("euler_plus") == 6);
    CHECK(res.at("euler_minus") == -4);
    CHECK(res.at("delzant") == true);
    CHECK(res.at("counts_ok") == true);
}

TEST_CASE("compose subcommands") {
    auto prod = cli::compose_product("fixture:elliptic_s2", "fixture:tp1_s2");
    CHECK(prod.exit_code == 0);
    CHECK(prod.report.at("results").at("euler") == 6);
    CHECK(prod.report.at("results").at("multiplicative_ok") == true);
    CHECK(prod.report.at("results").at("factor_eulers") == json::array({2, 3}));

    // two torus fixtures additionally run the block-diagonal cross-check
    auto tt = cli::compose_product("fixture:torus_s2", "fixture:torus_diag_m1_2");
    CHECK(tt.exit_code == 0);
    CHECK(tt.report.at("results").at("block_oracle").at("ok") == true);

    auto cover = cli::compose_cover("fixture:elliptic_s2", "", 3, "cyclic");
    CHECK(cover.exit_code == 0);
    CHECK(cover.report.at("results").at("euler") == 6);
    CHECK(cover.report.at("results").at("scaling_ok") == true);

    auto disj = cli::compose_cover("fixture:torus_diag_2_3", "", 2, "disjoint");
    CHECK(disj.exit_code == 0);
    CHECK(disj.report.at("results").at("euler") == 12);

    auto sym = cli::compose_sym("fixture:tp1_s1", 3);
    CHECK(sym.exit_code == 0);
    CHECK(sym.report.at("results").at("formula") == 4);
    CHECK(sym.report.at("results").at("series") == 4);

    // cyclic cover of a non-circle fails validation
    CHECK(cli::compose_cover("fixture:tp1_s2", "", 2, "cyclic").exit_code == 1);
    // unknown mode is a usage error
    CHECK(cli::compose_cover("fixture:elliptic_s1", "", 2, "mystery").exit_code == 3);
}

TEST_CASE("random curve sweeps give deterministic reports") {
    auto a = cli::curve_random(2, 1, 20, 424242, 3, 2);
    auto b = cli::curve_random(2, 1, 20, 424242, 3, 2);
    CHECK(a.exit_code == 0);
    CHECK(a.report.at("results").at("passes") == 20);
    CHECK(a.report.at("results").at("failures") == 0);
    CHECK(a.report.dump() == b.report.dump());

    auto c = cli::curve_random(2, 1, 20, 424243, 3, 2);
    CHECK(c.report.dump() != a.report.dump());
}

TEST_CASE("thread count does not change the bytes of a report") {
#ifdef _WIN32
    // setenv is POSIX; the suite targets linux
#else
    setenv("TROP_MORSE_THREADS", "1", 1);
    auto serial = cli::curve_random(3, 0, 16, 777, 4, 3);
    setenv("TROP_MORSE_THREADS", "4", 1);
    auto parallel = cli::curve_random(3, 0, 16, 777, 4, 3);
    unsetenv("TROP_MORSE_THREADS");
    CHECK(serial.report.dump() == parallel.report.dump());
#endif
}

TEST_CASE("reports carry input digests") {
    auto out = cli::torus_check("fixture:torus_s1");
    auto& inp = out.report.at("inputs");
    REQUIRE(inp.size() == 1);
    CHECK(inp[0].at("digest").get<std::string>().size() == 16); // fnv1a-64 hex
    // same input, same digest
    auto again = cli::torus_check("fixture:torus_s1");
    CHECK(inp[0].at("digest") == again.report.at("inputs")[0].at("digest"));
}

TEST_CASE("fixtures catalog mentions every family") {
    auto cat = cli::fixtures_catalog();
    for (const char* needle : {"elliptic_s", "tp1_s", "star_", "torus_", "lattice_", "cube_",
                               "simplex_", "segment_0_5", "two_simplex_2"})
        CHECK(cat.find(needle) != std::string::npos);
}
