#pragma once

// Deterministic random instances for property checks.  The generator is
// a fixed splitmix64 chain so reports are byte-identical across
// platforms and standard library versions.

#include <cstdint>

#include "tropmorse/curve.hpp"

namespace tropmorse {

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // inclusive bounds; slight modulo bias is irrelevant here
    long long range(long long lo, long long hi) {
        return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
    }
};

// Connected random curve with the requested first Betti number and number
// of leaves at infinity; every finite vertex has valence at most 3.
TropicalCurve random_curve(uint64_t seed, int genus, int leaves);

// Random permissible divisor: integer outgoing slopes at finite vertices
// of valence != 2 (zero-sum where the star forces it), zero at infinite
// ends, and breakpoints_per_edge interior breakpoints with values up to
// about max_level in magnitude.  Requires max_level >= 1.
CurveDivisor random_divisor(const TropicalCurve& curve, uint64_t seed, int max_level,
                            int breakpoints_per_edge);

} // namespace tropmorse
