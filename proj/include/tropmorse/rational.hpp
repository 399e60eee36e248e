#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator.
// All counting and classification in this project is exact; overflow
// throws instead of wrapping, so a result is either right or loud.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tropmorse {

using int128 = __int128;

inline long long checked_narrow(int128 v, const char* what) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw std::overflow_error(std::string("rational overflow in ") + what);
    return static_cast<long long>(v);
}

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        int128 n = int128(a.num_) * b.den_ + int128(b.num_) * a.den_;
        int128 d = int128(a.den_) * b.den_;
        return from128(n, d, "+");
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        int128 n = int128(a.num_) * b.den_ - int128(b.num_) * a.den_;
        int128 d = int128(a.den_) * b.den_;
        return from128(n, d, "-");
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128(int128(a.num_) * b.num_, int128(a.den_) * b.den_, "*");
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(int128(a.num_) * b.den_, int128(a.den_) * b.num_, "/");
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    // floor as an integer (exact)
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const { return -((-*this).floor()); }

    double to_double() const { return double(num_) / double(den_); }

    // canonical form: "p" when integral, otherwise "p/q" with q > 0, gcd 1
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // accepts "p" or "p/q"; throws std::invalid_argument on malformed input
    static Rat parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty rational string");
        auto slash = s.find('/');
        try {
            size_t used = 0;
            if (slash == std::string::npos) {
                long long n = std::stoll(s, &used);
                if (used != s.size()) throw std::invalid_argument("");
                return Rat(n);
            }
            long long n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw std::invalid_argument("");
            std::string ds = s.substr(slash + 1);
            long long d = std::stoll(ds, &used);
            if (used != ds.size()) throw std::invalid_argument("");
            return Rat(n, d);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed rational '" + s + "'");
        }
    }

private:
    static Rat from128(int128 n, int128 d, const char* what) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num_ = checked_narrow(n, what);
        r.den_ = checked_narrow(d, what);
        return r;
    }
    static int128 gcd128(int128 a, int128 b) {
        while (b != 0) { int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

} // namespace tropmorse
