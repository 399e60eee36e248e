#pragma once

// Finitely supported graded modules over a fixed coefficient ring,
// recorded as degree -> rank tables.  Only the ranks matter here: these
// are the building blocks for local Morse data and their Euler sums.

#include <map>
#include <string>

namespace tropmorse {

class GradedModule {
public:
    GradedModule() = default;

    // free module of the given rank concentrated in one degree
    static GradedModule free(int degree, long long rank);
    static GradedModule zero() { return GradedModule(); }

    bool is_zero() const { return betti_.empty(); }
    long long rank(int degree) const;
    const std::map<int, long long>& betti() const { return betti_; }

    long long euler() const;

    GradedModule direct_sum(const GradedModule& other) const;
    GradedModule tensor(const GradedModule& other) const;
    GradedModule shift(int by) const;

    bool operator==(const GradedModule& other) const { return betti_ == other.betti_; }
    bool operator!=(const GradedModule& other) const { return !(*this == other); }

    std::string str() const;

private:
    std::map<int, long long> betti_; // ranks, always >= 1 when present
};

// Euler characteristic of the n-th symmetric power of a space with Euler
// characteristic chi: the coefficient of t^n in (1-t)^(-chi), computed as
// the rising factorial chi (chi+1) ... (chi+n-1) / n!.
long long sym_euler(long long chi, long long n);

} // namespace tropmorse
