// trop-morse: local Morse data of smooth divisors on tropical curves,
// integral affine tori, and toric manifolds, with exact verification of
// the Riemann-Roch-type identities satisfied by their Euler sums.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tropmorse/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"local Morse data of divisors on tropical curves, tori, and "
                 "toric manifolds"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    bool json_out = false, quiet = false, list_fixtures = false;
    std::uint64_t seed = 0;
    app.add_flag("--json", json_out, "print the machine-readable report");
    app.add_flag("--quiet", quiet, "suppress the human-readable summary");
    app.add_flag("--fixtures", list_fixtures, "list the built-in fixtures and exit");
    app.add_option("--seed", seed, "seed for randomized commands")->default_val(0);

    auto* curve = app.add_subcommand("curve", "divisors on tropical curves");
    auto* ccheck = curve->add_subcommand("check", "validate a divisor and verify the identity");
    std::string curve_file, divisor_file;
    ccheck->add_option("curve", curve_file, "curve file or fixture:<name>")->required();
    ccheck->add_option("divisor", divisor_file, "divisor file (omit for fixtures)");

    auto* crandom = curve->add_subcommand("random", "verify the identity on random instances");
    long long genus = 0, leaves = 0, count = 1, max_level = 3, breakpoints = 2;
    crandom->add_option("--genus", genus, "first Betti number")->default_val(0);
    crandom->add_option("--leaves", leaves, "number of infinite ends")->default_val(0);
    crandom->add_option("--count", count, "number of instances")->default_val(1);
    crandom->add_option("--max-level", max_level, "slope budget")->default_val(3);
    crandom->add_option("--breakpoints", breakpoints, "interior breakpoints per edge")
        ->default_val(2);

    auto* torus = app.add_subcommand("torus", "quadratic divisors on integral affine tori");
    auto* tcheck = torus->add_subcommand("check", "count, index, and the determinant identity");
    std::string torus_file;
    tcheck->add_option("divisor", torus_file, "torus divisor file or fixture:<name>")
        ->required();

    auto* bs = app.add_subcommand("bs", "Bohr-Sommerfeld point counting");
    auto* bcount = bs->add_subcommand("count", "count lattice points against |det|");
    std::string lattice_file;
    bcount->add_option("lattice", lattice_file, "lattice file or fixture:<name>")->required();

    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial and reciprocity");
    std::string ehr_file;
    long long kmax = 4;
    ehr->add_option("polytope", ehr_file, "polytope file or fixture:<name>")->required();
    ehr->add_option("--kmax", kmax, "dilations checked")->default_val(4);

    auto* toric = app.add_subcommand("toric", "divisors on tropical toric manifolds");
    auto* tlmd = toric->add_subcommand("lmd", "Morse data of the divisor and its negation");
    std::string toric_file;
    tlmd->add_option("polytope", toric_file, "polytope file or fixture:<name>")->required();

    auto* compose = app.add_subcommand("compose", "products, covers, symmetric powers");
    auto* cproduct = compose->add_subcommand("product", "tensor two point sets");
    std::string prod_a, prod_b;
    cproduct->add_option("first", prod_a, "point set file or fixture:<name>")->required();
    cproduct->add_option("second", prod_b, "point set file or fixture:<name>")->required();

    auto* ccover = compose->add_subcommand("cover", "scale a point set along a cover");
    std::string cover_base, cover_divisor, cover_mode = "disjoint";
    long long cover_degree = 1;
    ccover->add_option("base", cover_base, "point set, curve file, or fixture:<name>")
        ->required();
    ccover->add_option("divisor", cover_divisor, "divisor file for cyclic mode");
    ccover->add_option("--degree", cover_degree, "cover degree")->default_val(1);
    ccover->add_option("--mode", cover_mode, "disjoint or cyclic")->default_val("disjoint");

    auto* csym = compose->add_subcommand("sym", "symmetric-power Euler characteristic");
    std::string sym_input;
    long long sym_n = 1;
    csym->add_option("points", sym_input, "point set file or fixture:<name>")->required();
    csym->add_option("--n", sym_n, "symmetric power")->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    if (list_fixtures) {
        std::cout << tropmorse::cli::fixtures_catalog();
        return 0;
    }

    auto start = std::chrono::steady_clock::now();
    tropmorse::cli::Outcome out;
    if (ccheck->parsed()) {
        out = tropmorse::cli::curve_check(curve_file, divisor_file);
    } else if (crandom->parsed()) {
        out = tropmorse::cli::curve_random(genus, leaves, count, seed, max_level, breakpoints);
    } else if (tcheck->parsed()) {
        out = tropmorse::cli::torus_check(torus_file);
    } else if (bcount->parsed()) {
        out = tropmorse::cli::bs_count(lattice_file);
    } else if (ehr->parsed()) {
        out = tropmorse::cli::ehrhart_report(ehr_file, kmax);
    } else if (tlmd->parsed()) {
        out = tropmorse::cli::toric_lmd_report(toric_file);
    } else if (cproduct->parsed()) {
        out = tropmorse::cli::compose_product(prod_a, prod_b);
    } else if (ccover->parsed()) {
        out = tropmorse::cli::compose_cover(cover_base, cover_divisor, cover_degree,
                                            cover_mode);
    } else if (csym->parsed()) {
        out = tropmorse::cli::compose_sym(sym_input, sym_n);
    } else {
        std::cout << app.help();
        return 3;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();

    if (json_out) {
        std::cout << out.report.dump(2) << "\n";
    } else if (!quiet) {
        std::cout << out.text << "(" << ms << " ms)\n";
    }
    return out.exit_code;
}
