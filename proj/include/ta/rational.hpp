#pragma once

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace ta {

// Exact rational with i64 parts; admissibility is a divisibility question,
// so no floating point is used anywhere in parameter arithmetic.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool integral() const { return den == 1; }
    long long as_int() const {
        if (!integral()) throw std::logic_error("Rational: not an integer");
        return num;
    }
    bool operator==(const Rational&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num;
    if (r.den != 1) os << '/' << r.den;
    return os;
}

} // namespace ta
