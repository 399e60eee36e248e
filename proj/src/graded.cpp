#include "tropmorse/graded.hpp"

#include <stdexcept>

#include "tropmorse/rational.hpp"

namespace tropmorse {

GradedModule GradedModule::free(int degree, long long rank) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    GradedModule m;
    if (rank > 0) m.betti_[degree] = rank;
    return m;
}

long long GradedModule::rank(int degree) const {
    auto it = betti_.find(degree);
    return it == betti_.end() ? 0 : it->second;
}

long long GradedModule::euler() const {
    long long chi = 0;
    for (auto& [deg, rk] : betti_) chi += (deg % 2 == 0 ? rk : -rk);
    return chi;
}

GradedModule GradedModule::direct_sum(const GradedModule& other) const {
    GradedModule out = *this;
    for (auto& [deg, rk] : other.betti_) {
        long long& slot = out.betti_[deg];
        slot += rk;
        if (slot == 0) out.betti_.erase(deg);
    }
    return out;
}

GradedModule GradedModule::tensor(const GradedModule& other) const {
    GradedModule out;
    for (auto& [d1, r1] : betti_)
        for (auto& [d2, r2] : other.betti_) {
            long long prod = checked_narrow(int128(r1) * r2, "tensor rank");
            long long& slot = out.betti_[d1 + d2];
            slot = checked_narrow(int128(slot) + prod, "tensor rank");
        }
    return out;
}

GradedModule GradedModule::shift(int by) const {
    GradedModule out;
    for (auto& [deg, rk] : betti_) out.betti_[deg + by] = rk;
    return out;
}

std::string GradedModule::str() const {
    if (betti_.empty()) return "0";
    std::string s;
    for (auto& [deg, rk] : betti_) {
        if (!s.empty()) s += " + ";
        s += "A^" + std::to_string(rk) + "[" + std::to_string(-deg) + "]";
    }
    return s;
}

long long sym_euler(long long chi, long long n) {
    if (n < 0) throw std::invalid_argument("negative symmetric power");
    if (n == 0) return 1;
    // rising factorial over n!, divided stepwise so intermediates stay
    // integral: prod_{k=1..n} (chi+k-1)/k is exact at each step because
    // the partial product is a binomial coefficient.
    int128 acc = 1;
    for (long long k = 1; k <= n; ++k) {
        acc = acc * (chi + k - 1);
        acc /= k;
    }
    return checked_narrow(acc, "sym_euler");
}

} // namespace tropmorse
