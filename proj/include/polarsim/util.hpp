#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polarsim {

inline bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

inline int log2_exact(std::uint64_t v) {
    if (!is_power_of_two(v)) throw std::invalid_argument("log2_exact: not a power of two");
    int n = 0;
    while (v > 1) { v >>= 1; ++n; }
    return n;
}

// Exact fraction for utilization figures; keeps them free of float noise.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

    std::string to_string() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

} // namespace polarsim
