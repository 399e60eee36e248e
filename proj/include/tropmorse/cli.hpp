#pragma once

// Command implementations behind the trop-morse executable.  Each returns
// an Outcome holding the exit code, the canonical JSON report, and a
// human-readable summary; the binary decides which of the two to print.
// Exit codes: 0 identities hold, 1 input fails validation, 2 a verified
// identity fails, 3 I/O or parse trouble.

#include <cstdint>
#include <string>

#include <json.hpp>

namespace tropmorse::cli {

struct Outcome {
    int exit_code = 0;
    nlohmann::json report;
    std::string text;
};

// paths may be "fixture:<name>" to pull a built-in example; a curve
// fixture carries its divisor, so divisor_input must then stay empty
Outcome curve_check(const std::string& curve_input, const std::string& divisor_input);

Outcome curve_random(long long genus, long long leaves, long long count, std::uint64_t seed,
                     long long max_level, long long breakpoints);

Outcome torus_check(const std::string& input);
Outcome bs_count(const std::string& input);
Outcome ehrhart_report(const std::string& input, long long kmax);
Outcome toric_lmd_report(const std::string& input);

Outcome compose_product(const std::string& a, const std::string& b);
Outcome compose_cover(const std::string& base, const std::string& divisor_input,
                      long long degree, const std::string& mode);
Outcome compose_sym(const std::string& input, long long n);

std::string fixtures_catalog();

} // namespace tropmorse::cli
